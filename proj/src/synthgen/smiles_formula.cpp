#include "rxnkit/synthgen/smiles_formula.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <vector>

namespace rxnkit::synthgen {

namespace {

constexpr std::array<std::string_view, 118> kElements = {
    "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na", "Mg", "Al", "Si", "P",
    "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",  "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn",
    "Ga", "Ge", "As", "Se", "Br", "Kr", "Rb", "Sr", "Y",  "Zr", "Nb", "Mo", "Tc", "Ru", "Rh",
    "Pd", "Ag", "Cd", "In", "Sn", "Sb", "Te", "I",  "Xe", "Cs", "Ba", "La", "Ce", "Pr", "Nd",
    "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb", "Lu", "Hf", "Ta", "W",  "Re",
    "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi", "Po", "At", "Rn", "Fr", "Ra", "Ac", "Th",
    "Pa", "U",  "Np", "Pu", "Am", "Cm", "Bk", "Cf", "Es", "Fm", "Md", "No", "Lr", "Rf", "Db",
    "Sg", "Bh", "Hs", "Mt", "Ds", "Rg", "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og"};

bool is_element(std::string_view s) {
  return std::find(kElements.begin(), kElements.end(), s) != kElements.end();
}

struct Atom {
  std::string element;
  bool aromatic = false;
  bool bracket = false;
  int explicit_h = 0;
  double bond_sum = 0.0;
  int aromatic_bonds = 0;
  int other_bond_sum = 0;
};

std::vector<int> default_valences(std::string_view element) {
  if (element == "B") return {3};
  if (element == "C") return {4};
  if (element == "N") return {3, 5};
  if (element == "O") return {2};
  if (element == "P") return {3, 5};
  if (element == "S") return {2, 4, 6};
  return {1};  // halogens
}

int implicit_hydrogens(const Atom& a) {
  if (a.bracket) return 0;
  int used;
  if (a.aromatic) {
    if (a.element == "O" || a.element == "S") return 0;
    used = a.aromatic_bonds + a.other_bond_sum + 1;
  } else {
    used = static_cast<int>(std::ceil(a.bond_sum - 1e-9));
  }
  for (int v : default_valences(a.element)) {
    if (v >= used) return v - used;
  }
  return 0;
}

class Counter {
 public:
  explicit Counter(std::string_view s) : s_(s) {}

  std::optional<std::map<std::string, int>> run() {
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (c == '(') {
        if (prev_ < 0) return std::nullopt;
        stack_.push_back(prev_);
        ++i_;
      } else if (c == ')') {
        if (stack_.empty() || pending_bond_ > 0) return std::nullopt;
        prev_ = stack_.back();
        stack_.pop_back();
        ++i_;
      } else if (c == '.') {
        if (!stack_.empty() || pending_bond_ > 0 || prev_ < 0) return std::nullopt;
        prev_ = -1;
        ++i_;
      } else if (c == '-' || c == '=' || c == '#' || c == '$' || c == ':' || c == '/' ||
                 c == '\\') {
        if (prev_ < 0 || pending_bond_ > 0) return std::nullopt;
        pending_bond_ = c == '=' ? 2 : c == '#' ? 3 : c == '$' ? 4 : 1;
        pending_aromatic_ = c == ':';
        ++i_;
      } else if ((c >= '0' && c <= '9') || c == '%') {
        if (!ring_closure()) return std::nullopt;
      } else if (c == '[') {
        if (!bracket_atom()) return std::nullopt;
      } else {
        if (!organic_atom()) return std::nullopt;
      }
    }
    if (atoms_.empty() || !stack_.empty() || !rings_.empty() || pending_bond_ > 0) {
      return std::nullopt;
    }
    std::map<std::string, int> counts;
    for (const Atom& a : atoms_) {
      ++counts[a.element];
      int h = a.explicit_h + implicit_hydrogens(a);
      if (h > 0) counts["H"] += h;
    }
    return counts;
  }

 private:
  struct Ring {
    int number;
    int atom;
    int bond;
    bool aromatic_bond;
  };

  void bond(int a, int b, int order, bool explicit_aromatic) {
    bool aromatic = explicit_aromatic || (order == 0 && atoms_[a].aromatic && atoms_[b].aromatic);
    int o = order == 0 ? 1 : order;
    for (int idx : {a, b}) {
      if (aromatic) {
        ++atoms_[idx].aromatic_bonds;
        atoms_[idx].bond_sum += 1.5;
      } else {
        atoms_[idx].other_bond_sum += o;
        atoms_[idx].bond_sum += o;
      }
    }
  }

  void add_atom(Atom atom) {
    atoms_.push_back(std::move(atom));
    int idx = static_cast<int>(atoms_.size()) - 1;
    if (prev_ >= 0) bond(prev_, idx, pending_bond_, pending_aromatic_);
    pending_bond_ = 0;
    pending_aromatic_ = false;
    prev_ = idx;
  }

  bool organic_atom() {
    std::string_view rest = s_.substr(i_);
    Atom a;
    if (rest.starts_with("Cl") || rest.starts_with("Br")) {
      a.element = std::string(rest.substr(0, 2));
      i_ += 2;
    } else {
      char c = rest.front();
      switch (c) {
        case 'B': case 'C': case 'N': case 'O': case 'P': case 'S': case 'F': case 'I':
          a.element = std::string(1, c);
          break;
        case 'b': case 'c': case 'n': case 'o': case 'p': case 's':
          a.element = std::string(1, static_cast<char>(c - 'a' + 'A'));
          a.aromatic = true;
          break;
        default:
          return false;
      }
      ++i_;
    }
    add_atom(std::move(a));
    return true;
  }

  bool bracket_atom() {
    std::size_t close = s_.find(']', i_);
    if (close == std::string_view::npos) return false;
    std::string_view body = s_.substr(i_ + 1, close - i_ - 1);
    std::size_t k = 0;
    while (k < body.size() && body[k] >= '0' && body[k] <= '9') ++k;  // isotope
    if (k >= body.size()) return false;
    Atom a;
    a.bracket = true;
    char c = body[k];
    if (c >= 'A' && c <= 'Z') {
      std::string two = k + 1 < body.size() ? std::string(body.substr(k, 2)) : std::string();
      if (two.size() == 2 && two[1] >= 'a' && two[1] <= 'z' && is_element(two)) {
        a.element = two;
        k += 2;
      } else if (is_element(std::string(1, c))) {
        a.element = std::string(1, c);
        k += 1;
      } else {
        return false;
      }
    } else if (c >= 'a' && c <= 'z') {
      std::string_view rest = body.substr(k);
      if (rest.starts_with("se") || rest.starts_with("as")) {
        a.element = rest.starts_with("se") ? "Se" : "As";
        k += 2;
      } else if (std::string_view("bcnops").find(c) != std::string_view::npos) {
        a.element = std::string(1, static_cast<char>(c - 'a' + 'A'));
        k += 1;
      } else {
        return false;
      }
      a.aromatic = true;
    } else {
      return false;
    }
    while (k < body.size() && body[k] == '@') ++k;
    if (k < body.size() && body[k] == 'H') {
      ++k;
      int h = 0;
      bool digits = false;
      while (k < body.size() && body[k] >= '0' && body[k] <= '9') {
        h = h * 10 + (body[k] - '0');
        digits = true;
        ++k;
        if (h > 99) return false;
      }
      a.explicit_h = digits ? h : 1;
    }
    while (k < body.size() && (body[k] == '+' || body[k] == '-')) {
      ++k;
      while (k < body.size() && body[k] >= '0' && body[k] <= '9') ++k;
    }
    if (k < body.size() && body[k] == ':') {
      ++k;
      if (k >= body.size()) return false;
      while (k < body.size() && body[k] >= '0' && body[k] <= '9') ++k;
    }
    if (k != body.size()) return false;
    i_ = close + 1;
    add_atom(std::move(a));
    return true;
  }

  bool ring_closure() {
    if (prev_ < 0) return false;
    int number;
    if (s_[i_] == '%') {
      if (i_ + 2 >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_ + 1])) ||
          !std::isdigit(static_cast<unsigned char>(s_[i_ + 2]))) {
        return false;
      }
      number = (s_[i_ + 1] - '0') * 10 + (s_[i_ + 2] - '0');
      i_ += 3;
    } else {
      number = s_[i_] - '0';
      ++i_;
    }
    auto it = std::find_if(rings_.begin(), rings_.end(),
                           [number](const Ring& r) { return r.number == number; });
    if (it == rings_.end()) {
      rings_.push_back({number, prev_, pending_bond_, pending_aromatic_});
    } else {
      if (it->atom == prev_) return false;
      int order = pending_bond_ > 0 ? pending_bond_ : it->bond;
      bond(it->atom, prev_, order, pending_aromatic_ || it->aromatic_bond);
      rings_.erase(it);
    }
    pending_bond_ = 0;
    pending_aromatic_ = false;
    return true;
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::vector<Atom> atoms_;
  std::vector<int> stack_;
  std::vector<Ring> rings_;
  int prev_ = -1;
  int pending_bond_ = 0;
  bool pending_aromatic_ = false;
};

}  // namespace

std::optional<std::map<std::string, int>> element_counts(std::string_view smiles) {
  if (smiles.empty() || smiles.size() > 4096) return std::nullopt;
  return Counter(smiles).run();
}

std::string hill_formula(const std::map<std::string, int>& counts) {
  std::string out;
  auto emit = [&](const std::string& el, int n) {
    if (n <= 0) return;
    out += el;
    if (n > 1) out += std::to_string(n);
  };
  bool carbon = counts.contains("C");
  if (carbon) {
    emit("C", counts.at("C"));
    if (counts.contains("H")) emit("H", counts.at("H"));
  }
  for (const auto& [el, n] : counts) {
    if (carbon && (el == "C" || el == "H")) continue;
    emit(el, n);
  }
  return out;
}

bool looks_like_smiles(std::string_view s) { return element_counts(s).has_value(); }

}  // namespace rxnkit::synthgen
