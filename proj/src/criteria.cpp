#include "rsv/criteria.hpp"

#include <numeric>
#include <stdexcept>

#include "rsv/occgraph.hpp"

namespace rsv {

InteriorGcd interior_gcd(const Word& u) {
  if (u.length() < 2) return {false, 0};
  if (u.length() == 2) return {true, 0};
  WordProfile interior(Word(u.str().substr(1, static_cast<std::size_t>(u.length()) - 2)));
  if (interior.content.count(u.head()) || interior.content.count(u.tail())) {
    return {true, 0};
  }
  int g = 0;
  for (const auto& [x, k] : interior.occurrences) g = std::gcd(g, k);
  return {true, g};
}

namespace {

int require_n(std::string_view name, std::optional<int> n) {
  if (!n || *n < 1) {
    throw std::invalid_argument(std::string(name) + " needs a positive n");
  }
  return *n;
}

bool occurrences_match_mod(const WordProfile& pu, const WordProfile& pv, int n) {
  std::set<Letter> letters = pu.content;
  letters.insert(pv.content.begin(), pv.content.end());
  for (Letter x : letters) {
    if ((pu.occ(x) - pv.occ(x)) % n != 0) return false;
  }
  return true;
}

// Whether some assignment can send w onto the sandwich element xyx of K_n:
// w must be a two-occurrence sandwich a W a whose interior counts can reach
// an exponent congruent to 1 mod n.
bool reaches_xyx(const WordProfile& pw, const Word& w, int n) {
  if (pw.length < 3 || pw.head != pw.tail || pw.occ(pw.head) != 2) return false;
  InteriorGcd g = interior_gcd(w);
  return g.value >= 1 && std::gcd(n, g.value) == 1;
}

bool c_lambda_criterion(const Word& u, const Word& v) {
  if (u.length() < 2 || v.length() < 2) return false;
  WordProfile pu(u), pv(v);
  if (pu.content != pv.content) return false;
  const bool head_simple_u = pu.occ(pu.head) == 1;
  const bool head_simple_v = pv.occ(pv.head) == 1;
  if (head_simple_u != head_simple_v) return false;
  if (head_simple_u && pu.head != pv.head) return false;
  const Letter h2u = u.at(1), h2v = v.at(1);
  const bool second_simple_u = pu.occ(h2u) == 1;
  const bool second_simple_v = pv.occ(h2v) == 1;
  if (second_simple_u != second_simple_v) return false;
  if (second_simple_u && (pu.head != pv.head || h2u != h2v)) return false;
  return true;
}

bool k_criterion(const Word& u, const Word& v, int n) {
  WordProfile pu(u), pv(v);
  if (pu.content != pv.content) return false;
  if (pu.length < 2 || pv.length < 2) return false;
  if (!occurrences_match_mod(pu, pv, n)) return false;

  const int hu = pu.occ(pu.head), tu = pu.occ(pu.tail);
  const int hv = pv.occ(pv.head), tv = pv.occ(pv.tail);

  const bool a = pu.head == pv.head && hu == 1 && hv == 1 && tu > 1 && tv > 1;
  const bool b = pu.tail == pv.tail && tu == 1 && tv == 1 && hu > 1 && hv > 1;
  const bool c =
      hu == 1 && tu == 1 && hv == 1 && tv == 1 && pu.head == pv.head && pu.tail == pv.tail;
  const bool ru = reaches_xyx(pu, u, n);
  const bool rv = reaches_xyx(pv, v, n);
  const bool d = ru && rv && pu.head == pv.head;
  const bool e = hu > 1 && tu > 1 && hv > 1 && tv > 1 && !ru && !rv;
  return a || b || c || d || e;
}

bool b_criterion(const Word& u, const Word& v) {
  if (!is_pq_trivial(u, 4, 2) && !is_pq_trivial(v, 4, 2)) return true;
  // abc = cba: three distinct letters, reversed.
  WordProfile pu(u);
  if (u.length() == 3 && pu.simple_letters.size() == 3 && v == u.reversed()) return true;
  // aba = bab.
  if (u.length() == 3 && v.length() == 3 && u.at(0) != u.at(1) && u.at(0) == u.at(2) &&
      v.at(0) == u.at(1) && v.at(1) == u.at(0) && v.at(2) == u.at(1)) {
    return true;
  }
  return false;
}

bool w_lambda_criterion(const Identity& id) {
  const Word& u = id.lhs;
  const Word& v = id.rhs;
  if (!b2_criterion(id)) return false;
  if (u.head() != v.head()) return false;
  OccurrenceGraph gu(u);
  if (gu.same_component({u.head(), 0}, {u.head(), 1})) return true;
  return u.length() >= 2 && v.length() >= 2 && u.at(1) == v.at(1);
}

}  // namespace

namespace {

bool known(std::string_view name, std::initializer_list<std::string_view> names) {
  for (std::string_view candidate : names) {
    if (name == candidate) return true;
  }
  return false;
}

}  // namespace

bool helper_criterion(std::string_view name, const Identity& id, std::optional<int> n) {
  if (!known(name, {"L2", "R2", "L2_1", "R2_1", "Y2", "C", "Cn", "N2", "N2_1", "N3", "C2n"})) {
    throw std::invalid_argument("unknown helper criterion '" + std::string(name) + "'");
  }
  if (name == "C" || name == "Cn" || name == "C2n") require_n(name, n);
  if (id.trivial()) return true;
  const Word& u = id.lhs;
  const Word& v = id.rhs;

  if (name == "L2") return u.head() == v.head();
  if (name == "R2") return u.tail() == v.tail();
  if (name == "L2_1") return analyze(u).left_core == analyze(v).left_core;
  if (name == "R2_1") return analyze(u).right_core == analyze(v).right_core;
  if (name == "Y2") return analyze(u).content == analyze(v).content;
  if (name == "C" || name == "Cn") {
    return occurrences_match_mod(analyze(u), analyze(v), require_n(name, n));
  }
  if (name == "N2") return u.length() > 1 && v.length() > 1;
  if (name == "N2_1") {
    WordProfile pu(u), pv(v);
    return pu.content == pv.content && pu.simple_letters == pv.simple_letters;
  }
  if (name == "N3") {
    if (u.length() >= 3 && v.length() >= 3) return true;
    return u.length() == 2 && u.at(0) != u.at(1) && v == u.reversed();
  }
  // name == "C2n"
  return u.length() >= 2 && v.length() >= 2 &&
         occurrences_match_mod(analyze(u), analyze(v), require_n(name, n));
}

bool b2_criterion(const Identity& id) {
  if (id.trivial()) return true;
  const Word& u = id.lhs;
  const Word& v = id.rhs;
  OccurrenceGraph gu(u), gv(v);
  if (gu.letters() != gv.letters()) return false;
  if (gu.components() != gv.components()) return false;
  return gu.same_component({u.head(), 1}, {v.head(), 1}) &&
         gu.same_component({u.tail(), 0}, {v.tail(), 0});
}

bool indicator_criterion(std::string_view name, const Identity& id, std::optional<int> n) {
  if (!known(name, {"A", "B", "C_lambda", "C_rho", "K", "D", "F_lambda", "F_rho", "W_lambda",
                    "W_rho", "L2_1", "R2_1", "N3"})) {
    throw std::invalid_argument("unknown indicator criterion '" + std::string(name) + "'");
  }
  if (name == "K") require_n(name, n);
  if (id.trivial()) return true;
  const Word& u = id.lhs;
  const Word& v = id.rhs;

  if (name == "A") return helper_criterion("N2_1", id);
  if (name == "B") return b_criterion(u, v);
  if (name == "C_lambda") return c_lambda_criterion(u, v);
  if (name == "C_rho") return c_lambda_criterion(u.reversed(), v.reversed());
  if (name == "K") return k_criterion(u, v, require_n(name, n));
  if (name == "D") return k_criterion(u, v, 1);
  if (name == "F_lambda") {
    return u.length() >= 2 && v.length() >= 2 && u.head() == v.head() && u.at(1) == v.at(1);
  }
  if (name == "F_rho") {
    return u.length() >= 2 && v.length() >= 2 && u.tail() == v.tail() &&
           u.at(u.length() - 2) == v.at(v.length() - 2);
  }
  if (name == "W_lambda") return w_lambda_criterion(id);
  if (name == "W_rho") return w_lambda_criterion(id.reversed());
  return helper_criterion(name, id);  // L2_1, R2_1, N3
}

bool criterion(std::string_view name, const Identity& id, std::optional<int> n) {
  if (name == "B2") return b2_criterion(id);
  if (name == "Gamma") return indicator_criterion("W_lambda", id);
  if (name == "L2" || name == "R2" || name == "Y2" || name == "C" || name == "Cn" ||
      name == "N2" || name == "N2_1" || name == "C2n") {
    return helper_criterion(name, id, n);
  }
  return indicator_criterion(name, id, n);
}

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names = {
      "A",  "B",  "C_lambda", "C_rho", "N3", "D",  "K",  "F_lambda", "F_rho", "W_lambda",
      "W_rho", "L2_1", "R2_1", "B2", "L2", "R2", "Y2", "N2", "N2_1", "C", "C2n", "Gamma"};
  return names;
}

}  // namespace rsv
