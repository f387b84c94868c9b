#include "text.hpp"

#include <cctype>

#include "errors.hpp"

namespace ncsf {

Basis parse_basis(std::string_view letter) {
  if (letter == "H") return NSymBasis::H;
  if (letter == "R") return NSymBasis::R;
  if (letter == "S") return NSymBasis::S;
  if (letter == "Qp") return NSymBasis::Qp;
  if (letter == "M") return QSymBasis::M;
  if (letter == "F") return QSymBasis::F;
  if (letter == "Sd") return QSymBasis::Sd;
  if (letter == "P") return QSymBasis::P;
  if (letter == "h") return SymBasis::h;
  if (letter == "s") return SymBasis::s;
  throw ParseError("unknown basis '" + std::string(letter) + "'");
}

std::string basis_name(const Basis& b) {
  return std::visit([](auto tag) { return std::string(basis_tag(tag)); }, b);
}

Basis basis_of(const AnyExpr& e) {
  return std::visit([](const auto& x) -> Basis { return x.basis; }, e);
}

const Terms& terms_of(const AnyExpr& e) {
  return std::visit([](const auto& x) -> const Terms& { return x.terms; }, e);
}

AnyExpr make_expr(const Basis& b, Terms terms) {
  return std::visit(
      [&](auto tag) -> AnyExpr {
        using T = decltype(tag);
        if constexpr (std::is_same_v<T, NSymBasis>) return NSymExpr{tag, std::move(terms)};
        else if constexpr (std::is_same_v<T, QSymBasis>) return QSymExpr{tag, std::move(terms)};
        else {
          for (const auto& [k, c] : terms)
            if (!k.is_partition()) throw DomainError("symmetric function index must be a partition");
          return SymExpr{tag, std::move(terms)};
        }
      },
      b);
}

std::string render_terms(const Terms& t, std::string_view letter) {
  if (t.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : t) {
    const bool negative = c.terms().back().second < 0;
    const QPoly mag = negative ? -c : c;
    if (first) s += negative ? "-" : "";
    else s += negative ? " - " : " + ";
    first = false;
    if (mag.terms().size() > 1) s += "(" + mag.to_string() + ")*";
    else if (mag != QPoly(1)) s += mag.to_string() + "*";
    s += letter;
    s += "[" + (k.empty() ? std::string() : k.to_string()) + "]";
  }
  return s;
}

std::string render(const AnyExpr& e) { return render_terms(terms_of(e), basis_name(basis_of(e))); }

namespace {

std::string_view trim(std::string_view t) {
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  return t;
}

struct RawTerm {
  int sign;
  std::string_view body;
};

std::vector<RawTerm> split_terms(std::string_view text) {
  std::vector<RawTerm> out;
  int sign = 1;
  int pending_ops = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c == '+' || c == '-') {
      if (++pending_ops > 1) throw ParseError("two operators in a row");
      if (c == '-') sign = -sign;
      ++pos;
      continue;
    }
    if (!out.empty() && pending_ops == 0) throw ParseError("missing operator between terms");
    int depth = 0;
    std::size_t end = pos;
    for (; end < text.size(); ++end) {
      const char d = text[end];
      if (d == '(' || d == '[') ++depth;
      else if (d == ')' || d == ']') {
        if (--depth < 0) throw ParseError("unbalanced brackets");
      } else if ((d == '+' || d == '-') && depth == 0) {
        break;
      }
    }
    if (depth != 0) throw ParseError("unbalanced brackets");
    out.push_back({sign, trim(text.substr(pos, end - pos))});
    sign = 1;
    pending_ops = 0;
    pos = end;
  }
  if (out.empty()) throw ParseError("empty expression");
  if (pending_ops) throw ParseError("expression ends with an operator");
  return out;
}

QPoly parse_coefficient(std::string_view c) {
  c = trim(c);
  if (c.empty()) return QPoly(1);
  if (c.front() == '(') {
    if (c.back() != ')') throw ParseError("unbalanced parentheses in coefficient");
    return QPoly::parse(c.substr(1, c.size() - 2));
  }
  if (c.find_first_of("+-") != std::string_view::npos)
    throw ParseError("coefficients with several terms must be parenthesized");
  return QPoly::parse(c);
}

}  // namespace

AnyExpr parse_expression(std::string_view text) {
  text = trim(text);
  if (text == "0") return NSymExpr{};
  std::optional<Basis> basis;
  std::vector<std::pair<Composition, QPoly>> items;
  std::vector<QPoly> scalars;
  for (const auto& [sign, body] : split_terms(text)) {
    if (body.back() != ']') {
      QPoly c = parse_coefficient(body);
      scalars.push_back(sign < 0 ? -c : c);
      continue;
    }
    const std::size_t open = body.rfind('[');
    if (open == std::string_view::npos) throw ParseError("missing '[' in term '" + std::string(body) + "'");
    std::size_t letters = open;
    while (letters > 0 && std::isalpha(static_cast<unsigned char>(body[letters - 1]))) --letters;
    std::string_view name = body.substr(letters, open - letters);
    if (name.empty()) throw ParseError("missing basis letter in term '" + std::string(body) + "'");
    // "q*S[..]" has the letters "S"; a glued "qS[..]" is not accepted.
    Basis b = parse_basis(name);
    if (basis && *basis != b) throw ParseError("expression mixes bases " + basis_name(*basis) + " and " + basis_name(b));
    basis = b;
    std::string_view coef = trim(body.substr(0, letters));
    if (!coef.empty()) {
      if (coef.back() != '*') throw ParseError("expected '*' between coefficient and basis element");
      coef.remove_suffix(1);
      if (trim(coef).empty()) throw ParseError("missing coefficient before '*'");
    }
    QPoly c = parse_coefficient(coef);
    Composition index = Composition::parse(body.substr(open, body.size() - open));
    items.emplace_back(std::move(index), sign < 0 ? -c : c);
  }
  if (!basis) basis = NSymBasis::H;
  for (auto& c : scalars) items.emplace_back(Composition{}, c);
  Terms terms;
  for (const auto& [k, c] : items) add_term(terms, k, c);
  return make_expr(*basis, std::move(terms));
}

nlohmann::ordered_json to_json(const AnyExpr& e) {
  const Terms& t = terms_of(e);
  nlohmann::ordered_json j;
  j["basis"] = basis_name(basis_of(e));
  auto d = homogeneous_degree(t);
  j["degree"] = d ? nlohmann::ordered_json(*d) : nlohmann::ordered_json(nullptr);
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [k, c] : t) j["terms"].push_back({{"index", k.parts()}, {"coef", c.to_string()}});
  return j;
}

AnyExpr from_json(const nlohmann::ordered_json& j) {
  try {
    Basis b = parse_basis(j.at("basis").get<std::string>());
    Terms terms;
    for (const auto& term : j.at("terms")) {
      Composition index(term.at("index").get<std::vector<int>>());
      add_term(terms, index, QPoly::parse(term.at("coef").get<std::string>()));
    }
    return make_expr(b, std::move(terms));
  } catch (const nlohmann::ordered_json::exception& ex) {
    throw ParseError(std::string("malformed expression JSON: ") + ex.what());
  } catch (const DomainError& ex) {
    throw ParseError(ex.what());
  }
}

nlohmann::ordered_json to_json(const TransitionMatrix& m) {
  nlohmann::ordered_json j;
  j["from"] = m.from;
  j["to"] = m.to;
  j["n"] = m.n;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : m.rows) j["rows"].push_back(r.parts());
  j["cols"] = nlohmann::ordered_json::array();
  for (const auto& c : m.cols) j["cols"].push_back(c.parts());
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& row : m.entries) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& e : row) r.push_back(e.to_string());
    j["entries"].push_back(r);
  }
  return j;
}

}  // namespace ncsf
