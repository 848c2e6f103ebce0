#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pencilaid/aid.hpp"

namespace pencilaid {

struct CorpusCase {
  std::string name;
  Pencil pencil;
};

/// Every *.json file under dir (sorted by file name): Pencil, Algebra,
/// CanonicalSpec or Invariants JSON.
std::vector<CorpusCase> load_corpus(const std::filesystem::path& dir);

struct CorpusRow {
  std::string name;
  std::size_t n = 0;
  std::size_t dim_inn = 0;
  std::size_t formula_aid = 0;
  std::size_t solver_aid = 0;
  bool agree = false;
  std::string error;  // non-empty when the case could not be evaluated
};

CorpusRow run_case(const CorpusCase& c, FieldMode mode);
std::vector<CorpusRow> run_corpus(const std::vector<CorpusCase>& cases, FieldMode mode);
std::string format_corpus_table(const std::vector<CorpusRow>& rows);

}  // namespace pencilaid
