#include "weylgrowth/errors.hpp"
#include "weylgrowth/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

namespace weylgrowth {

namespace {

RatVec e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

std::vector<RatVec> type_b_simple(std::size_t n) {
  std::vector<RatVec> s;
  for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(e(n, i) - e(n, i + 1));
  s.push_back(e(n, n - 1));
  return s;
}

std::vector<RatVec> type_c_simple(std::size_t n) {
  auto s = type_b_simple(n);
  s.back() = Rational(2) * e(n, n - 1);
  return s;
}

std::vector<RatVec> type_d_simple(std::size_t n) {
  std::vector<RatVec> s;
  for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(e(n, i) - e(n, i + 1));
  s.push_back(e(n, n - 2) + e(n, n - 1));
  return s;
}

// simple-root basis: the simple roots are the unit covectors and Q is the Cartan Gram matrix
RootSystemData from_gram(RatMatrix gram) {
  RootSystemData d;
  const std::size_t n = gram.rows();
  for (std::size_t i = 0; i < n; ++i) d.simple_roots.push_back(e(n, i));
  d.inner_product = std::move(gram);
  return d;
}

RootSystemData type_a(std::size_t n) {
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = 2;
    if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = -1;
  }
  return from_gram(std::move(g));
}

// Bourbaki numbering: 1-3-4-5-6-7-8 chain with 2 attached to 4
RootSystemData type_e(std::size_t n) {
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
  auto link = [&](std::size_t a, std::size_t b) { g(a - 1, b - 1) = g(b - 1, a - 1) = -1; };
  link(1, 3);
  link(2, 4);
  link(3, 4);
  for (std::size_t i = 4; i < n; ++i) link(i, i + 1);
  return from_gram(std::move(g));
}

RootSystemData type_g2() {
  RatMatrix g(2, 2);
  g(0, 0) = 2;
  g(0, 1) = g(1, 0) = -3;
  g(1, 1) = 6;
  return from_gram(std::move(g));
}

RootSystemData type_f4() {
  RootSystemData d;
  const std::size_t n = 4;
  d.simple_roots = {e(n, 1) - e(n, 2), e(n, 2) - e(n, 3), e(n, 3),
                    Rational(1, 2) * (e(n, 0) - e(n, 1) - e(n, 2) - e(n, 3))};
  return d;
}

// multiplicities for the B/C/BC family in standard coordinates
void classical_multiplicities(RootSystemData& d, std::size_t n, int m_long, int m_short, int m_double) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      d.multiplicities.push_back({e(n, i) - e(n, j), m_long});
      d.multiplicities.push_back({e(n, i) + e(n, j), m_long});
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (m_short > 0) d.multiplicities.push_back({e(n, i), m_short});
    if (m_double > 0) d.multiplicities.push_back({Rational(2) * e(n, i), m_double});
  }
}

// Hermitian-type real forms of rank p: so/su/sp(p,q) with root multiplicities scaled by d_base
RootSystemData unitary_family(std::size_t p, std::size_t q, int d_base) {
  RootSystemData d;
  if (p < q) {
    d.simple_roots = type_b_simple(p);
    classical_multiplicities(d, p, d_base, d_base * static_cast<int>(q - p), d_base - 1);
  } else {
    d.simple_roots = type_c_simple(p);
    classical_multiplicities(d, p, d_base, 0, d_base - 1);
  }
  return d;
}

std::size_t parse_size(const std::string& s) {
  if (s.size() > 4) throw InputError("preset index too large: " + s);
  return static_cast<std::size_t>(std::stoul(s));
}

}  // namespace

RootSystem build_root_system(std::string_view preset) {
  std::string name;
  for (char c : preset) {
    if (c == '_' || std::isspace(static_cast<unsigned char>(c))) continue;
    name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  static const std::regex abstract_re("([abcdefg])(\\d+)");
  static const std::regex sl_re("sl\\((\\d+),([rch])\\)");
  static const std::regex pq_re("(so|su|sp)\\((\\d+),(\\d+)\\)");
  std::smatch m;
  RootSystemData d;
  if (std::regex_match(name, m, abstract_re)) {
    const char t = m[1].str()[0];
    const std::size_t n = parse_size(m[2]);
    if (n == 0) throw InputError("rank must be positive: " + std::string(preset));
    switch (t) {
      case 'a': d = type_a(n); break;
      case 'b': d.simple_roots = type_b_simple(n); break;
      case 'c': d.simple_roots = type_c_simple(n); break;
      case 'd':
        if (n < 2) throw InputError("type D needs rank at least 2");
        d.simple_roots = type_d_simple(n);
        break;
      case 'e':
        if (n < 6 || n > 8) throw InputError("type E exists only in ranks 6, 7, 8");
        d = type_e(n);
        break;
      case 'f':
        if (n != 4) throw InputError("type F exists only in rank 4");
        d = type_f4();
        break;
      case 'g':
        if (n != 2) throw InputError("type G exists only in rank 2");
        d = type_g2();
        break;
    }
  } else if (std::regex_match(name, m, sl_re)) {
    const std::size_t n = parse_size(m[1]);
    if (n < 2) throw InputError("sl(n,.) needs n >= 2");
    const int mult = m[2] == "r" ? 1 : m[2] == "c" ? 2 : 4;
    d = type_a(n - 1);
    if (mult != 1) {
      RootSystem unit = RootSystem::build(d);
      for (const auto& r : unit.positive_roots()) d.multiplicities.push_back({r.coords, mult});
    }
  } else if (std::regex_match(name, m, pq_re)) {
    const std::string family = m[1];
    const std::size_t p = parse_size(m[2]);
    const std::size_t q = parse_size(m[3]);
    if (p == 0 || p > q) throw InputError("expected 1 <= p <= q in " + std::string(preset));
    if (family == "so") {
      if (p + q < 3) throw InputError("so(p,q) needs p + q >= 3");
      if (p < q) {
        d.simple_roots = type_b_simple(p);
        classical_multiplicities(d, p, 1, static_cast<int>(q - p), 0);
      } else {
        d.simple_roots = type_d_simple(p);
      }
    } else {
      d = unitary_family(p, q, family == "su" ? 2 : 4);
    }
  } else {
    throw InputError("unknown root system preset: " + std::string(preset));
  }
  d.label = name;
  return RootSystem::build(d);
}

std::vector<std::string> preset_examples() {
  return {"a1", "a2", "b2", "b3", "c3", "d4", "g2", "f4", "e6", "e7", "e8",
          "sl(3,R)", "sl(3,C)", "sl(3,H)", "so(2,5)", "so(3,3)", "su(2,3)", "sp(1,2)"};
}

}  // namespace weylgrowth
