#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tfc/embedding.hpp"
#include "tfc/families.hpp"

namespace tfc {

/// One line per instance: `<name> <family> key=value ...`. Blank lines and
/// lines starting with '#' are ignored.
std::vector<GenSpec> parse_corpus_spec(std::string_view text);

/// Built-in corpus covering every family.
std::string default_corpus_spec();

struct CorpusEntry {
  GenSpec spec;
  EmbeddedGraph graph;
  std::string emg;
  std::string sha256;
};

/// Generates every instance; duplicate names raise Error.
std::vector<CorpusEntry> build_corpus(const std::vector<GenSpec>& specs);

/// `name<TAB>family<TAB>params<TAB>sha256` per entry.
std::string manifest(const std::vector<CorpusEntry>& entries);

/// Writes <name>.emg files and MANIFEST.tsv into dir (created if needed).
void write_corpus(const std::vector<CorpusEntry>& entries, const std::filesystem::path& dir);

std::string sha256_hex(std::string_view data);

}  // namespace tfc
