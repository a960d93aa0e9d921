#include "rsv/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsv {

namespace {

Relation rel(const char* lhs, const char* rhs) {
  if (std::string(rhs) == "0") return {Word(lhs), std::nullopt};
  return {Word(lhs), Word(rhs)};
}

FiniteSemigroup presented(const std::string& name, const Presentation& p) {
  FiniteSemigroup s = from_presentation(p);
  s.name = name;
  return s;
}

FiniteSemigroup renamed_dual(const FiniteSemigroup& s, const std::string& name) {
  FiniteSemigroup d = dual(s);
  d.name = name;
  return d;
}

// --- K_n ---------------------------------------------------------------
//
// Normal forms: x | y^k | x y^k | y^k x (1 <= k <= n+1) | xyx | 0, with
// exponents above n+1 folded back into [2, n+1] mod n.

struct KElem {
  enum Kind { X, Y, XY, YX, XYX, ZERO } kind;
  int k = 0;
};

std::string k_name(const KElem& e) {
  switch (e.kind) {
    case KElem::X: return "x";
    case KElem::Y: return std::string(static_cast<std::size_t>(e.k), 'y');
    case KElem::XY: return "x" + std::string(static_cast<std::size_t>(e.k), 'y');
    case KElem::YX: return std::string(static_cast<std::size_t>(e.k), 'y') + "x";
    case KElem::XYX: return "xyx";
    case KElem::ZERO: return "0";
  }
  return {};
}

KElem k_product(const KElem& a, const KElem& b, int n) {
  auto norm = [n](int e) { return e <= n + 1 ? e : 2 + (e - 2) % n; };
  auto pinch = [n](int k) {  // x y^k x
    return (k == 1 || k == n + 1) ? KElem{KElem::XYX, 0} : KElem{KElem::ZERO, 0};
  };
  const KElem zero{KElem::ZERO, 0};

  if (a.kind == KElem::ZERO || b.kind == KElem::ZERO) return zero;
  switch (a.kind) {
    case KElem::X:
      switch (b.kind) {
        case KElem::Y: return {KElem::XY, b.k};
        case KElem::YX: return pinch(b.k);
        default: return zero;
      }
    case KElem::Y:
      switch (b.kind) {
        case KElem::X: return {KElem::YX, a.k};
        case KElem::Y: return {KElem::Y, norm(a.k + b.k)};
        case KElem::YX: return {KElem::YX, norm(a.k + b.k)};
        default: return zero;
      }
    case KElem::XY:
      switch (b.kind) {
        case KElem::X: return pinch(a.k);
        case KElem::Y: return {KElem::XY, norm(a.k + b.k)};
        case KElem::YX: return pinch(norm(a.k + b.k));
        default: return zero;
      }
    default:
      return zero;  // yx-block and xyx annihilate everything on the right
  }
}

FiniteSemigroup make_k(int n) {
  if (n < 1) throw std::invalid_argument("K needs n >= 1");
  std::vector<KElem> elems;
  elems.push_back({KElem::X, 0});
  elems.push_back({KElem::Y, 1});
  std::vector<KElem> rest;
  for (int k = 2; k <= n + 1; ++k) rest.push_back({KElem::Y, k});
  for (int k = 1; k <= n + 1; ++k) rest.push_back({KElem::XY, k});
  for (int k = 1; k <= n + 1; ++k) rest.push_back({KElem::YX, k});
  rest.push_back({KElem::XYX, 0});
  std::sort(rest.begin(), rest.end(), [](const KElem& a, const KElem& b) {
    return shortlex_less(k_name(a), k_name(b));
  });
  elems.insert(elems.end(), rest.begin(), rest.end());
  elems.push_back({KElem::ZERO, 0});

  FiniteSemigroup s;
  s.name = "K_" + std::to_string(n);
  for (const KElem& e : elems) s.elements.push_back(k_name(e));
  s.generators = {{'x', 0}, {'y', 1}};
  s.zero = static_cast<int>(elems.size()) - 1;

  std::map<std::string, int> idx;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) {
    idx[s.elements[static_cast<std::size_t>(i)]] = i;
  }
  const int size = static_cast<int>(elems.size());
  s.table.assign(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size)));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      s.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          idx.at(k_name(k_product(elems[static_cast<std::size_t>(i)],
                                  elems[static_cast<std::size_t>(j)], n)));
    }
  }
  return s;
}

// --- B2 and Gamma -------------------------------------------------------

FiniteSemigroup make_b2() {
  FiniteSemigroup s;
  s.name = "B2";
  s.elements = {"(0,0)", "(0,1)", "(1,0)", "(1,1)", "0"};
  s.generators = {{'a', 1}, {'b', 2}};
  s.zero = 4;
  auto idx = [](int i, int j) { return i * 2 + j; };
  s.table.assign(5, std::vector<int>(5, 4));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          if (j == k) s.table[static_cast<std::size_t>(idx(i, j))][static_cast<std::size_t>(idx(k, l))] = idx(i, l);
        }
      }
    }
  }
  return s;
}

struct GammaElem {
  int i, j, k, l;
  bool zero;
};

FiniteSemigroup make_gamma(const std::string& name) {
  std::vector<GammaElem> elems = {
      {0, 1, 2, 0, false},  // a
      {1, 0, 0, 0, false},  // x
      {1, 0, 1, 0, false},  // y
  };
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) elems.push_back({i, j, k, 1, false});
    }
  }
  elems.push_back({0, 0, 0, 0, true});

  auto tuple_name = [](const GammaElem& e) {
    if (e.zero) return std::string("0");
    return "(" + std::to_string(e.i) + "," + std::to_string(e.j) + "," +
           std::to_string(e.k) + "," + std::to_string(e.l) + ")";
  };
  auto product = [](const GammaElem& a, const GammaElem& b) -> GammaElem {
    if (a.zero || b.zero || a.j != b.i) return {0, 0, 0, 0, true};
    if (a.k != 2) return {a.i, b.j, a.k, 1, false};
    return {a.i, b.j, b.k, 1, false};
  };

  FiniteSemigroup s;
  s.name = name;
  for (const GammaElem& e : elems) s.elements.push_back(tuple_name(e));
  s.generators = {{'a', 0}, {'x', 1}, {'y', 2}};
  s.zero = static_cast<int>(elems.size()) - 1;

  std::map<std::string, int> idx;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) {
    idx[s.elements[static_cast<std::size_t>(i)]] = i;
  }
  const int size = static_cast<int>(elems.size());
  s.table.assign(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size)));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      s.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = idx.at(
          tuple_name(product(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)])));
    }
  }
  return s;
}

// --- Two- and three-element helpers --------------------------------------

FiniteSemigroup make_named(const std::string& name, std::vector<std::string> elements,
                           std::vector<std::vector<int>> table, std::map<Letter, int> gens,
                           std::optional<int> zero) {
  FiniteSemigroup s;
  s.name = name;
  s.elements = std::move(elements);
  s.table = std::move(table);
  s.generators = std::move(gens);
  s.zero = zero;
  return s;
}

}  // namespace

FiniteSemigroup cyclic(int index, int period) {
  if (index < 1 || period < 1) throw std::invalid_argument("cyclic needs index, period >= 1");
  const int size = index + period - 1;
  FiniteSemigroup s;
  s.name = "C_{" + std::to_string(index) + "," + std::to_string(period) + "}";
  for (int e = 1; e <= size; ++e) {
    s.elements.push_back(e == 1 ? "c" : "c^" + std::to_string(e));
  }
  s.generators = {{'c', 0}};
  if (period == 1) s.zero = size - 1;
  auto norm = [&](int e) { return e <= size ? e : index + (e - index) % period; };
  s.table.assign(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size)));
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= size; ++j) {
      s.table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = norm(i + j) - 1;
    }
  }
  return s;
}

Presentation presentation_for(const std::string& name, std::optional<int> n) {
  if (name == "A") {
    return {{'x', 'y'}, {rel("x", "xx"), rel("yy", "0"), rel("xy", "yx")}, 5};
  }
  if (name == "B") {
    return {{'x', 'y'}, {rel("xx", "0"), rel("yy", "0"), rel("xyx", "yxy")}, 6};
  }
  if (name == "C_lambda") {
    // The relations are reconstructed so that xy is a nonzero element killed
    // by left multiplication, which is what the 5-element table requires.
    return {{'x', 'y'},
            {rel("xxx", "xx"), rel("yx", "y"), rel("xxy", "0"), rel("yy", "0")},
            6};
  }
  if (name == "N3") {
    return {{'x'}, {rel("xxx", "0")}, 6};
  }
  if (name == "D") {
    return {{'x', 'y'}, {rel("xx", "0"), rel("y", "yy"), rel("yxy", "0")}, 6};
  }
  if (name == "K") {
    if (!n) throw std::invalid_argument("K needs n");
    if (*n < 1 || *n > 3) throw std::invalid_argument("presentation_for(K) supports n in 1..3");
    std::vector<Relation> rels;
    std::string ys(static_cast<std::size_t>(*n + 2), 'y');
    rels.push_back(rel("xx", "0"));
    rels.push_back({Word("yy"), Word(ys)});
    rels.push_back(rel("yxy", "0"));
    for (int q = 2; q <= *n; ++q) {
      rels.push_back({Word("x" + std::string(static_cast<std::size_t>(q), 'y') + "x"), std::nullopt});
    }
    rels.push_back({Word("xyx"), Word("x" + std::string(static_cast<std::size_t>(*n + 1), 'y') + "x")});
    return {{'x', 'y'}, rels, 2 * *n + 4};
  }
  if (name == "F_lambda") {
    return {{'x', 'y'},
            {rel("xy", "xyx"), rel("xy", "xyy"), rel("yx", "yxy"), rel("yx", "yxx"),
             rel("xx", "xxy"), rel("xx", "xxx"), rel("yy", "yyx"), rel("yy", "yyy")},
            6};
  }
  if (name == "W_lambda") {
    return {{'a', 'x', 'y'},
            {rel("aa", "0"), rel("xx", "0"), rel("yy", "0"), rel("xy", "0"), rel("yx", "0"),
             rel("ax", "axax"), rel("ay", "ayay"), rel("xa", "xaxa"), rel("ya", "yaya"),
             rel("xay", "xax"), rel("yax", "yay")},
            8};
  }
  if (name == "L2_1") {
    return {{'a', 'x', 'y'},
            {rel("x", "xx"), rel("y", "yy"), rel("a", "aa"), rel("xy", "x"), rel("yx", "y"),
             rel("ax", "x"), rel("xa", "x"), rel("ay", "y"), rel("ya", "y")},
            4};
  }
  throw std::invalid_argument("no presentation recorded for '" + name + "'");
}

FiniteSemigroup catalog(const std::string& name, std::optional<int> n, std::optional<int> d) {
  auto need_n = [&](const char* who) {
    if (!n || *n < 1) throw std::invalid_argument(std::string(who) + " needs a positive n");
    return *n;
  };

  FiniteSemigroup s;
  if (name == "A" || name == "B" || name == "C_lambda" || name == "N3" || name == "D" ||
      name == "F_lambda" || name == "L2_1" || name == "W_lambda") {
    s = presented(name, presentation_for(name));
  } else if (name == "C_rho") {
    s = renamed_dual(catalog("C_lambda"), name);
  } else if (name == "F_rho") {
    s = renamed_dual(catalog("F_lambda"), name);
  } else if (name == "W_rho") {
    s = renamed_dual(catalog("W_lambda"), name);
  } else if (name == "R2_1") {
    s = renamed_dual(catalog("L2_1"), name);
  } else if (name == "K") {
    s = make_k(need_n("K"));
  } else if (name == "B2") {
    s = make_b2();
  } else if (name == "Gamma") {
    s = make_gamma("Gamma");
  } else if (name == "L2") {
    s = make_named("L2", {"a", "b"}, {{0, 0}, {1, 1}}, {{'a', 0}, {'b', 1}}, std::nullopt);
  } else if (name == "R2") {
    s = make_named("R2", {"a", "b"}, {{0, 1}, {0, 1}}, {{'a', 0}, {'b', 1}}, std::nullopt);
  } else if (name == "Y2") {
    s = make_named("Y2", {"1", "0"}, {{0, 1}, {1, 1}}, {{'a', 0}, {'b', 1}}, 1);
  } else if (name == "N2") {
    s = make_named("N2", {"a", "0"}, {{1, 1}, {1, 1}}, {{'a', 0}}, 1);
  } else if (name == "N2_1") {
    s = make_named("N2_1", {"1", "a", "0"}, {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}},
                   {{'e', 0}, {'a', 1}}, 2);
  } else if (name == "C") {
    int order = need_n("C");
    s = cyclic(1, order);
    s.name = "C_" + std::to_string(order);
  } else if (name == "C2n") {
    s = cyclic(2, need_n("C2n"));
  } else if (name == "Crd") {
    if (!n || !d) throw std::invalid_argument("Crd needs both n (index) and d (period)");
    s = cyclic(*n, *d);
  } else {
    throw std::invalid_argument("unknown semigroup '" + name + "'");
  }
  s.validate();
  return s;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "A",  "B",  "C_lambda", "C_rho", "N3", "D",  "K",    "F_lambda", "F_rho",
      "W_lambda", "W_rho", "L2_1", "R2_1", "B2", "L2", "R2", "Y2", "N2",
      "N2_1", "C",  "C2n", "Crd", "Gamma"};
  return names;
}

}  // namespace rsv
