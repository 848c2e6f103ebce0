#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "pencilaid/serialize.hpp"

namespace support {

using namespace pencilaid;

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(PENCILAID_DATA_DIR) + "/fixtures/" + name;
}

inline Pencil fixture(const std::string& name) {
  return pencil_from_json(parse_json(read_text(fixture_path(name))));
}

inline Poly P(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

/// [[0, λI − μC], [−(λI − μC)ᵗ, 0]] for the companion C of a monic polynomial.
inline Pencil companion_pencil(const Poly& q) {
  const auto w = static_cast<std::size_t>(q.degree());
  RatMatrix a(2 * w, 2 * w), b(2 * w, 2 * w);
  for (std::size_t i = 0; i < w; ++i) {
    b(i, w + i) = Rat(1);
    b(w + i, i) = Rat(-1);
    if (i > 0) {
      a(i, w + i - 1) = Rat(-1);
      a(w + i - 1, i) = Rat(1);
    }
    a(i, 2 * w - 1) = q[static_cast<int>(i)];
    a(2 * w - 1, i) = -q[static_cast<int>(i)];
  }
  return Pencil(a, b);
}

inline void require_code(ErrorCode want, auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    if (e.code() == want) return;
    throw;
  }
  throw std::runtime_error(std::string("expected error ") + error_code_name(want));
}

}  // namespace support
