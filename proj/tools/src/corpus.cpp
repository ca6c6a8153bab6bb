#include "gcs/cli/corpus.hpp"

#include <algorithm>

#include "gcs/errors.hpp"

namespace gcs::cli {

namespace detail {
std::span<const CorpusEntry> embedded_corpus();
}

std::span<const CorpusEntry> corpus() { return detail::embedded_corpus(); }

Problem corpus_problem(std::string_view name) {
  const auto entries = corpus();
  auto it = std::find_if(entries.begin(), entries.end(), [&](const CorpusEntry& e) { return e.name == name; });
  if (it == entries.end()) throw InvalidArgument("no bundled problem named '" + std::string(name) + "'");
  Problem p = parse_problem(it->text, "corpus:" + std::string(name));
  if (p.name.empty()) p.name = std::string(name);
  return p;
}

}  // namespace gcs::cli
