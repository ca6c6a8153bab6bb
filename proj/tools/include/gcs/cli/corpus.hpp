#pragma once

#include <span>
#include <string_view>

#include "gcs/cli/problem.hpp"

namespace gcs::cli {

struct CorpusEntry {
  std::string_view name;
  std::string_view text;
};

// Problem files bundled into the binary from data/problems.
std::span<const CorpusEntry> corpus();

// Throws InvalidArgument for unknown names.
Problem corpus_problem(std::string_view name);

}  // namespace gcs::cli
