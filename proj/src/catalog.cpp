#include "fmb/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "fmb/error.hpp"

namespace fmb {
namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Small builder for hand-written presentations.
struct Pc {
  GroupSpec s;
  explicit Pc(std::string name) { s.name = std::move(name); }
  Pc& gen(const std::string& g, int order, const std::string& power = "1") {
    s.gens.push_back(g);
    s.relorders.push_back(order);
    pending_powers_.push_back(power);
    return *this;
  }
  Pc& comm(const std::string& gj, const std::string& gi, const std::string& w) {
    pending_comms_.emplace_back(gj, gi, w);
    return *this;
  }
  GroupSpec build() {
    for (auto& pw : pending_powers_) s.powerrels.push_back(parse_word(s, pw));
    for (auto& [gj, gi, w] : pending_comms_) {
      int j = s.gen_index(gj), i = s.gen_index(gi);
      Word word = parse_word(s, w);
      if (!word.empty()) s.commrels[{j, i}] = std::move(word);
    }
    return s;
  }

private:
  std::vector<std::string> pending_powers_;
  std::vector<std::tuple<std::string, std::string, std::string>> pending_comms_;
};

bool is_prime_power(int n, int* p_out = nullptr) {
  if (n < 2) return false;
  for (int p = 2; p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      if (p_out) *p_out = p;
      return n == 1;
    }
  return false;
}

GroupSpec cyclic(int n) {
  if (!is_prime_power(n)) fail("BadParams", "C" + std::to_string(n) + ": order must be a prime power");
  return Pc("C" + std::to_string(n)).gen("a", n).build();
}

GroupSpec dihedral(int two_n) {
  int h = two_n / 2;
  // a^b = a^-1, so (b,a) = a^2 at every order.
  return Pc("D" + std::to_string(two_n))
      .gen("a", h)
      .gen("b", 2)
      .comm("b", "a", "a^2")
      .build();
}

GroupSpec quaternion(int two_n) {
  int h = two_n / 2;
  return Pc("Q" + std::to_string(two_n))
      .gen("a", h)
      .gen("b", 2, "a^" + std::to_string(h / 2))
      .comm("b", "a", "a^2")
      .build();
}

GroupSpec semidihedral(int two_n) {
  int h = two_n / 2;
  return Pc("SD" + std::to_string(two_n))
      .gen("a", h)
      .gen("b", 2)
      .comm("b", "a", "a^" + std::to_string(h - h / 2 + 2))
      .build();
}

GroupSpec modular_md(int two_n) {
  int h = two_n / 2;
  return Pc("MD" + std::to_string(two_n))
      .gen("a", h)
      .gen("b", 2)
      .comm("b", "a", "a^" + std::to_string(h / 2))
      .build();
}

GroupSpec h16() {
  return Pc("H_16").gen("a", 4).gen("c", 2).gen("b", 2).comm("c", "a", "b").build();
}

GroupSpec d8yc4() {
  return Pc("D8YC4")
      .gen("a", 4)
      .gen("b", 2)
      .gen("c", 2, "a^2")
      .comm("b", "a", "a^2")
      .build();
}

GroupSpec h1(int p) {
  if (p <= 3) fail("BadParams", "H_1 requires p > 3");
  std::string inv = "d^" + std::to_string(p - 1);
  return Pc("H_1(" + std::to_string(p) + ")")
      .gen("a", p)
      .gen("c", p)
      .gen("d", p)
      .gen("f", p)
      .comm("c", "a", inv)
      .comm("d", "c", "f")
      .build();
}

GroupSpec h2(int p) {
  if (p < 3) fail("BadParams", "H_2 requires p >= 3");
  return Pc("H_2(" + std::to_string(p) + ")")
      .gen("a", p)
      .gen("c", p)
      .gen("d", p)
      .gen("h", p)
      .comm("c", "a", "d^" + std::to_string(p - 1))
      .build();
}

GroupSpec t2(int n, int m) {
  if (n < 1 || m < 1 || n + m > 10) fail("BadParams", "T2 needs 1 <= n,m with 2^(n+m+1) small");
  return Pc("T2(" + std::to_string(n) + "," + std::to_string(m) + ")")
      .gen("a", 1 << n)
      .gen("b", 1 << m)
      .gen("c", 2)
      .comm("b", "a", "c")
      .build();
}

GroupSpec t3(int n) {
  if (n < 2 || n > 10) fail("BadParams", "T3 needs n >= 2");
  return Pc("T3(" + std::to_string(n) + ")")
      .gen("a", 1 << n)
      .gen("b", 2)
      .gen("c", 2)
      .gen("d", 2)
      .comm("b", "a", "c")
      .comm("c", "a", "d")
      .build();
}

GroupSpec gap32(int idx) {
  switch (idx) {
    case 2: {
      auto s = t2(2, 2);
      s.name = "G_2";
      return s;
    }
    case 4:
      return Pc("G_4").gen("a", 8).gen("b", 4).comm("b", "a", "a^4").build();
    case 5:
      return Pc("G_5").gen("a", 8).gen("b", 2).gen("c", 2).comm("b", "a", "c").build();
    case 6: {
      auto s = t3(2);
      s.name = "G_6";
      return s;
    }
    case 7:
      return Pc("G_7")
          .gen("a", 8).gen("b", 2).gen("c", 2)
          .comm("b", "a", "a^4*c")
          .comm("c", "a", "a^4")
          .build();
    case 8:
      return Pc("G_8")
          .gen("a", 8).gen("b", 2, "a^4").gen("c", 2)
          .comm("b", "a", "a^4*c")
          .comm("c", "a", "a^4")
          .build();
    case 9:
      return Pc("G_9").gen("a", 2).gen("b", 8).gen("c", 2).comm("c", "b", "a*b^2").build();
    case 10:
      return Pc("G_10").gen("a", 8).gen("b", 2, "a^4").gen("c", 2).comm("b", "a", "a^2*c").build();
    case 11:
      return Pc("G_11").gen("a", 4).gen("b", 4).gen("c", 2).comm("c", "b", "a^3*b^2").build();
    case 12:
      return Pc("G_12").gen("a", 4).gen("b", 8).comm("b", "a", "a^2").build();
    case 13:
      return Pc("G_13").gen("a", 8).gen("b", 4).comm("b", "a", "a^6").build();
    case 14:
      return Pc("G_14").gen("a", 8).gen("b", 4).comm("b", "a", "a^2").build();
    case 15:
      return Pc("G_15").gen("a", 8).gen("b", 4, "a^4").comm("b", "a", "a^2").build();
    case 17: {
      auto s = modular_md(32);
      s.name = "G_17";
      return s;
    }
    case 18: {
      auto s = dihedral(32);
      s.name = "G_18";
      return s;
    }
    case 19: {
      auto s = semidihedral(32);
      s.name = "G_19";
      return s;
    }
    case 20: {
      auto s = quaternion(32);
      s.name = "G_20";
      return s;
    }
    case 23:
      return Pc("G_23").gen("a", 4).gen("b", 4).gen("c", 2).comm("b", "a", "a^2").build();
    case 24:
      return Pc("G_24").gen("a", 4).gen("b", 4).gen("c", 2).comm("c", "b", "a^2").build();
    case 27:
      return Pc("G_27")
          .gen("a", 2).gen("b", 2).gen("c", 2).gen("d", 2).gen("e", 2)
          .comm("c", "a", "d")
          .comm("c", "b", "e")
          .build();
    case 28:
      return Pc("G_28")
          .gen("a", 4).gen("b", 2).gen("c", 2).gen("d", 2)
          .comm("c", "a", "a^2")
          .comm("c", "b", "d")
          .build();
    case 29:
      return Pc("G_29")
          .gen("a", 4).gen("b", 2).gen("c", 2, "a^2").gen("d", 2)
          .comm("c", "a", "a^2")
          .comm("c", "b", "d")
          .build();
    case 30:
      return Pc("G_30")
          .gen("a", 4).gen("b", 2).gen("c", 2).gen("d", 2)
          .comm("c", "a", "d")
          .comm("c", "b", "a^2")
          .build();
    case 31:
      return Pc("G_31")
          .gen("a", 4).gen("b", 4).gen("c", 2)
          .comm("c", "a", "a^2")
          .comm("c", "b", "a^2*b^2")
          .build();
    case 32:
      return Pc("G_32")
          .gen("a", 4).gen("b", 4).gen("c", 2, "a^2*b^2")
          .comm("c", "a", "a^2")
          .comm("c", "b", "a^2*b^2")
          .build();
    case 33:
      return Pc("G_33")
          .gen("a", 4).gen("b", 4).gen("c", 2)
          .comm("c", "a", "a^2*b^2")
          .comm("c", "b", "a^2")
          .build();
    case 34:
      return Pc("G_34")
          .gen("a", 4).gen("b", 4).gen("c", 2)
          .comm("c", "a", "a^2")
          .comm("c", "b", "b^2")
          .build();
    case 35:
      return Pc("G_35")
          .gen("a", 4).gen("b", 4).gen("c", 2, "a^2")
          .comm("c", "a", "a^2")
          .comm("c", "b", "b^2")
          .build();
    case 38:
      return Pc("G_38").gen("a", 8).gen("b", 2).gen("c", 2).comm("c", "b", "a^4").build();
    case 42:
      return Pc("G_42")
          .gen("a", 8).gen("b", 2, "a^4").gen("c", 2, "a^4")
          .comm("b", "a", "a^2")
          .build();
    case 43:
      return Pc("G_43")
          .gen("a", 8).gen("b", 2).gen("c", 2)
          .comm("b", "a", "a^2")
          .comm("c", "a", "a^4")
          .build();
    case 44:
      return Pc("G_44")
          .gen("a", 8).gen("b", 2, "a^4").gen("c", 2)
          .comm("b", "a", "a^2")
          .comm("c", "a", "a^4")
          .build();
    case 49:
      return Pc("G_49")
          .gen("a", 4).gen("b", 2, "a^2").gen("c", 2, "a^2").gen("d", 2, "a^2")
          .comm("b", "a", "a^2")
          .comm("d", "c", "a^2")
          .build();
    case 50:
      return Pc("G_50")
          .gen("a", 4).gen("b", 2).gen("c", 2).gen("d", 2, "a^2")
          .comm("c", "b", "a^2")
          .comm("d", "a", "a^2")
          .comm("d", "c", "a^2")
          .build();
    default:
      break;
  }
  // Direct-product entries keep their factor presentations.
  static const std::map<int, const char*> products = {
      {22, "H_16 x C2"},  {25, "D8 x C4"},    {26, "Q8 x C4"},   {37, "MD16 x C2"},
      {39, "D16 x C2"},   {40, "SD16 x C2"},  {41, "Q16 x C2"},  {46, "D8 x C2 x C2"},
      {47, "Q8 x C2 x C2"}, {48, "D8YC4 x C2"}};
  auto it = products.find(idx);
  if (it == products.end()) fail("UnknownLabel", "G_" + std::to_string(idx) + " is not cataloged");
  auto s = catalog_lookup(it->second);
  s.name = "G_" + std::to_string(idx);
  return s;
}

GroupSpec lookup_single(const std::string& raw, const CatalogParams& given) {
  std::string name = trim(raw);
  // Parenthesized parameters: H_1(5), T2(2,2), T3(3).
  CatalogParams params = given;
  size_t paren = name.find('(');
  if (paren != std::string::npos && name.back() == ')') {
    std::string args = name.substr(paren + 1, name.size() - paren - 2);
    name = trim(name.substr(0, paren));
    std::vector<int> vals;
    std::stringstream ss(args);
    std::string tok;
    while (std::getline(ss, tok, ','))
      try {
        vals.push_back(std::stoi(trim(tok)));
      } catch (const std::exception&) {
        fail("BadParams", "bad parameter list in '" + raw + "'");
      }
    if (name == "H_1" || name == "H_2") {
      if (vals.size() != 1) fail("BadParams", raw);
      params.p = vals[0];
    } else if (name == "T2") {
      if (vals.size() != 2) fail("BadParams", raw);
      params.n = vals[0];
      params.m = vals[1];
    } else if (name == "T3") {
      if (vals.size() != 1) fail("BadParams", raw);
      params.n = vals[0];
    } else {
      fail("UnknownLabel", "'" + raw + "' does not take parameters");
    }
  }
  // Tolerate an underscore between the family letter and the order.
  auto squeeze = [](std::string s) {
    if (s.size() > 2 && s[0] != 'G' && s[0] != 'H' && s[0] != 'T') {
      size_t u = s.find('_');
      if (u != std::string::npos) s.erase(u, 1);
    }
    return s;
  };
  name = squeeze(name);
  auto num_after = [&](size_t k) {
    try {
      return std::stoi(name.substr(k));
    } catch (const std::exception&) {
      fail("UnknownLabel", "unknown catalog label '" + raw + "'");
    }
  };
  if (name == "H_16" || name == "H16") return h16();
  if (name == "D8YC4") return d8yc4();
  if (name == "H_1") return h1(params.p.value_or(0));
  if (name == "H_2") return h2(params.p.value_or(0));
  if (name == "T2") {
    if (!params.n || !params.m) fail("BadParams", "T2 requires n and m");
    return t2(*params.n, *params.m);
  }
  if (name == "T3") {
    if (!params.n) fail("BadParams", "T3 requires n");
    return t3(*params.n);
  }
  if (name.rfind("G_", 0) == 0) return gap32(num_after(2));
  if (name.rfind("SD", 0) == 0) {
    int n = num_after(2);
    if (n < 16 || (n & (n - 1))) fail("BadParams", name);
    return semidihedral(n);
  }
  if (name.rfind("MD", 0) == 0) {
    int n = num_after(2);
    if (n < 8 || (n & (n - 1))) fail("BadParams", name);
    return modular_md(n);
  }
  if (!name.empty() && (name[0] == 'C' || name[0] == 'D' || name[0] == 'Q')) {
    int n = num_after(1);
    if (name[0] == 'C') return cyclic(n);
    if (n < 8 || (n & (n - 1))) fail("BadParams", name + ": order must be 2^k >= 8");
    return name[0] == 'D' ? dihedral(n) : quaternion(n);
  }
  fail("UnknownLabel", "unknown catalog label '" + raw + "'");
}

}  // namespace

GroupSpec catalog_lookup(const std::string& name, const CatalogParams& params) {
  // 'x' separates direct factors; no catalog label contains the letter.
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : name) {
    if (ch == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  GroupSpec s = lookup_single(parts[0], params);
  for (size_t i = 1; i < parts.size(); ++i)
    s = direct_product_spec(s, lookup_single(parts[i], params));
  return s;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names = {
      // abelian
      "C2", "C4", "C8", "C16", "C2 x C2", "C4 x C2", "C8 x C2", "C4 x C4",
      "C2 x C2 x C2", "C4 x C2 x C2", "C2 x C2 x C2 x C2",
      "C3", "C9", "C3 x C3", "C5", "C25", "C7", "C49",
      // order 8..16, p = 2
      "D8", "Q8", "D16", "Q16", "SD16", "MD16", "H_16", "D8YC4",
      "D8 x C2", "Q8 x C2",
      // odd catalog
      "H_1(5)", "H_2(3)", "H_2(5)",
  };
  for (int i : {2, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 17, 18, 19, 20, 22,
                23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 37, 38, 39,
                40, 41, 42, 43, 44, 46, 47, 48, 49, 50})
    names.push_back("G_" + std::to_string(i));
  return names;
}

Word parse_word(const GroupSpec& spec, const std::string& text) {
  std::string t = trim(text);
  if (t.empty() || t == "1" || t == "-") return {};
  Word w;
  std::stringstream ss(t);
  std::string part;
  while (std::getline(ss, part, '*')) {
    part = trim(part);
    size_t caret = part.find('^');
    std::string g = caret == std::string::npos ? part : part.substr(0, caret);
    int e = caret == std::string::npos ? 1 : std::stoi(part.substr(caret + 1));
    if (e < 0) fail("InconsistentPresentation", "negative exponent in word '" + text + "'");
    if (e > 0) w.emplace_back(spec.gen_index(trim(g)), e);
  }
  return w;
}

std::string word_text(const GroupSpec& spec, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (auto& [g, e] : w) {
    if (!out.empty()) out += "*";
    out += spec.gens[g];
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

GroupSpec parse_group_text(const std::vector<std::string>& lines, const std::string& name) {
  GroupSpec s;
  s.name = name;
  std::vector<std::pair<std::string, std::string>> powers;
  std::vector<std::tuple<std::string, std::string, std::string>> comms;
  for (const auto& raw : lines) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string kind;
    ss >> kind;
    if (kind == "gen") {
      std::string g, kw1, kw2, word;
      int q = 0;
      ss >> g >> kw1 >> q >> kw2;
      std::getline(ss, word);
      if (kw1 != "order" || kw2 != "power" || q < 2)
        fail("ParseError", "bad gen line: " + line);
      s.gens.push_back(g);
      s.relorders.push_back(q);
      powers.emplace_back(g, trim(word));
    } else if (kind == "comm") {
      std::string gj, gi, word;
      ss >> gj >> gi;
      std::getline(ss, word);
      comms.emplace_back(gj, gi, trim(word));
    } else {
      fail("ParseError", "unrecognized group line: " + line);
    }
  }
  if (s.gens.empty()) fail("ParseError", "group text declares no generators");
  for (auto& [g, word] : powers) s.powerrels.push_back(parse_word(s, word));
  for (auto& [gj, gi, word] : comms) {
    int j = s.gen_index(gj), i = s.gen_index(gi);
    if (j <= i) fail("ParseError", "comm pair must list the later generator first");
    Word w = parse_word(s, word);
    if (!w.empty()) s.commrels[{j, i}] = std::move(w);
  }
  return s;
}

std::vector<std::string> group_text(const GroupSpec& spec) {
  std::vector<std::string> lines;
  for (size_t i = 0; i < spec.gens.size(); ++i) {
    lines.push_back("gen " + spec.gens[i] + " order " + std::to_string(spec.relorders[i]) +
                    " power " + word_text(spec, spec.powerrels[i]));
  }
  for (auto& [ji, w] : spec.commrels)
    lines.push_back("comm " + spec.gens[ji.first] + " " + spec.gens[ji.second] + " " +
                    word_text(spec, w));
  return lines;
}

}  // namespace fmb
