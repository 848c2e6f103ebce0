#include "pencilaid/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "pencilaid/serialize.hpp"

namespace pencilaid {

namespace {

Pencil pencil_from_case_json(const json& j) {
  Pencil p = j.contains("blocks")  ? build_canonical(spec_from_json(j))
             : j.contains("pairs") ? canonical_from_invariants(invariants_from_json(j))
                                   : pencil_from_json(j);
  if (j.contains("congruence_seed")) {
    const json& s = j.at("congruence_seed");
    if (!s.is_number_unsigned()) throw Error(ErrorCode::Parse, "congruence_seed must be a non-negative integer");
    p = random_congruence(p, s.get<std::uint64_t>());
  }
  return p;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

std::vector<CorpusCase> load_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw Error(ErrorCode::InvalidInput, "corpus directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusCase> cases;
  for (const auto& f : files) {
    try {
      cases.push_back({f.stem().string(), pencil_from_case_json(parse_json(read_file(f)))});
    } catch (const Error& e) {
      throw Error(e.code(), f.filename().string() + ": " + e.what());
    }
  }
  return cases;
}

CorpusRow run_case(const CorpusCase& c, FieldMode mode) {
  CorpusRow row;
  row.name = c.name;
  row.n = c.pencil.size();
  try {
    const auto r = cross_check_pencil(c.pencil, mode);
    row.dim_inn = r.formula.dim_inn;
    row.formula_aid = r.formula.dim_aid;
    row.solver_aid = r.solver.dim_aid;
    row.agree = r.agree;
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

std::vector<CorpusRow> run_corpus(const std::vector<CorpusCase>& cases, FieldMode mode) {
  std::vector<CorpusRow> rows;
  rows.reserve(cases.size());
  for (const auto& c : cases) rows.push_back(run_case(c, mode));
  return rows;
}

std::string format_corpus_table(const std::vector<CorpusRow>& rows) {
  std::size_t w = 4;
  for (const auto& r : rows) w = std::max(w, r.name.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(w)) << "case" << std::right << std::setw(5) << "n"
     << std::setw(9) << "dim_inn" << std::setw(13) << "aid_formula" << std::setw(12) << "aid_solver"
     << "  agree\n";
  for (const auto& r : rows) {
    os << std::left << std::setw(static_cast<int>(w)) << r.name << std::right << std::setw(5) << r.n;
    if (!r.error.empty()) {
      os << "  error: " << r.error << "\n";
      continue;
    }
    os << std::setw(9) << r.dim_inn << std::setw(13) << r.formula_aid << std::setw(12) << r.solver_aid
       << "  " << (r.agree ? "yes" : "NO") << "\n";
  }
  return os.str();
}

}  // namespace pencilaid
