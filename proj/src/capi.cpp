#include <ncsf/ncsf.h>

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "checks.hpp"
#include "errors.hpp"
#include "skew.hpp"
#include "tableaux.hpp"
#include "text.hpp"

struct ncsf_expr {
  ncsf::AnyExpr value;
};

struct ncsf_report {
  ncsf::CheckReport value;
};

namespace {

using namespace ncsf;

thread_local std::string last_error;

class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class F>
ncsf_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return NCSF_OK;
  } catch (const ParseError& e) {
    last_error = e.what();
    return NCSF_E_PARSE;
  } catch (const DomainError& e) {
    last_error = e.what();
    return NCSF_E_DOMAIN;
  } catch (const Unsupported& e) {
    last_error = e.what();
    return NCSF_E_UNSUPPORTED;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return NCSF_E_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return NCSF_E_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return NCSF_E_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw std::invalid_argument(std::string(what) + " must not be null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void give(char** out, const std::string& s) {
  require(out, "out");
  *out = dup(s);
}

void give(ncsf_expr** out, AnyExpr e) {
  require(out, "out");
  *out = new ncsf_expr{std::move(e)};
}

std::string format(const nlohmann::ordered_json& j, const std::string& text, ncsf_format f) {
  return f == NCSF_JSON ? j.dump() + "\n" : text;
}

Composition comp(const char* s, const char* what) {
  require(s, what);
  return Composition::parse(s);
}

const char* family(const Basis& b) {
  switch (b.index()) {
    case 0: return "NSym";
    case 1: return "QSym";
    default: return "Sym";
  }
}

AnyExpr convert(const AnyExpr& e, const Basis& target) {
  if (e.index() != target.index())
    throw Unsupported(std::string("cannot convert from ") + family(basis_of(e)) + " to " + family(target));
  return std::visit(
      [&](const auto& x) -> AnyExpr {
        using B = decltype(x.basis);
        return to_basis(x, std::get<B>(target));
      },
      e);
}

std::string tableaux_text(const std::vector<ImmaculateTableau>& ts) {
  std::string s = std::to_string(ts.size()) + " tableaux\n";
  for (const auto& t : ts) s += "\n" + t.to_string();
  return s;
}

nlohmann::ordered_json comp_json(const Composition& c) { return c.parts(); }

}  // namespace

extern "C" {

const char* ncsf_version(void) { return "1.0.0"; }

const char* ncsf_status_string(ncsf_status status) {
  switch (status) {
    case NCSF_OK: return "ok";
    case NCSF_E_INVALID_ARGUMENT: return "invalid argument";
    case NCSF_E_PARSE: return "parse error";
    case NCSF_E_DOMAIN: return "domain error";
    case NCSF_E_UNSUPPORTED: return "unsupported operation";
    case NCSF_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ncsf_last_error(void) { return last_error.c_str(); }

void ncsf_string_free(char* s) { std::free(s); }

ncsf_status ncsf_expr_parse(const char* text, ncsf_expr** out) {
  return guarded([&] {
    require(text, "text");
    give(out, parse_expression(text));
  });
}

ncsf_status ncsf_expr_from_json(const char* json, ncsf_expr** out) {
  return guarded([&] {
    require(json, "json");
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(json);
    } catch (const nlohmann::ordered_json::exception& e) {
      throw ParseError(e.what());
    }
    give(out, from_json(j));
  });
}

ncsf_status ncsf_expr_basis_element(const char* basis, const char* index, ncsf_expr** out) {
  return guarded([&] {
    require(basis, "basis");
    Terms t;
    add_term(t, comp(index, "index"), QPoly(1));
    give(out, make_expr(parse_basis(basis), std::move(t)));
  });
}

void ncsf_expr_free(ncsf_expr* e) { delete e; }

ncsf_status ncsf_expr_basis(const ncsf_expr* e, char** out) {
  return guarded([&] {
    require(e, "expression");
    give(out, basis_name(basis_of(e->value)));
  });
}

ncsf_status ncsf_expr_render(const ncsf_expr* e, ncsf_format f, char** out) {
  return guarded([&] {
    require(e, "expression");
    give(out, f == NCSF_JSON ? to_json(e->value).dump() : render(e->value));
  });
}

ncsf_status ncsf_expr_equal(const ncsf_expr* a, const ncsf_expr* b, int* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = a->value == b->value;
  });
}

ncsf_status ncsf_expr_coefficient(const ncsf_expr* e, const char* index, char** out) {
  return guarded([&] {
    require(e, "expression");
    give(out, coefficient_of(terms_of(e->value), comp(index, "index")).to_string());
  });
}

ncsf_status ncsf_expr_convert(const ncsf_expr* e, const char* target, ncsf_expr** out) {
  return guarded([&] {
    require(e, "expression");
    require(target, "target");
    give(out, convert(e->value, parse_basis(target)));
  });
}

ncsf_status ncsf_expr_product(const ncsf_expr* a, const ncsf_expr* b, ncsf_expr** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    if (a->value.index() != b->value.index()) throw Unsupported("product of elements from different families");
    if (const auto* x = std::get_if<NSymExpr>(&a->value)) {
      give(out, product(*x, std::get<NSymExpr>(b->value)));
    } else if (const auto* y = std::get_if<SymExpr>(&a->value)) {
      give(out, to_basis(sym_product(*y, std::get<SymExpr>(b->value)), y->basis));
    } else {
      throw Unsupported("QSym products are not implemented; use the Sd pieri kind for F_i Sd_alpha");
    }
  });
}

ncsf_status ncsf_expr_add(const ncsf_expr* a, const ncsf_expr* b, ncsf_expr** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    AnyExpr rhs = convert(b->value, basis_of(a->value));
    Terms t = terms_of(a->value);
    add_scaled(t, terms_of(rhs), QPoly(1));
    give(out, make_expr(basis_of(a->value), std::move(t)));
  });
}

ncsf_status ncsf_expr_specialize_q(const ncsf_expr* e, long value, ncsf_expr** out) {
  return guarded([&] {
    require(e, "expression");
    give(out, make_expr(basis_of(e->value), specialize_q(terms_of(e->value), value)));
  });
}

ncsf_status ncsf_expr_pairing(const ncsf_expr* f, const ncsf_expr* g, char** out) {
  return guarded([&] {
    require(f, "f");
    require(g, "g");
    const auto* x = std::get_if<NSymExpr>(&f->value);
    const auto* y = std::get_if<QSymExpr>(&g->value);
    if (!x || !y) throw Unsupported("pairing takes an NSym element and a QSym element");
    give(out, pairing(*x, *y).to_string());
  });
}

ncsf_status ncsf_chi(const ncsf_expr* f, const char* target, ncsf_expr** out) {
  return guarded([&] {
    require(f, "f");
    require(target, "target");
    const auto* x = std::get_if<NSymExpr>(&f->value);
    if (!x) throw Unsupported("chi is defined on NSym elements");
    Basis b = parse_basis(target);
    const auto* sb = std::get_if<SymBasis>(&b);
    if (!sb) throw DomainError("chi target must be h or s");
    give(out, to_basis(chi(*x), *sb));
  });
}

ncsf_status ncsf_pieri(const char* kind, const char* alpha, int s, ncsf_expr** out) {
  return guarded([&] {
    require(kind, "kind");
    const Composition a = comp(alpha, "alpha");
    if (s < 0) throw DomainError("s must be non-negative");
    const std::string k = kind;
    if (k == "S") {
      give(out, pieri_immaculate(a, s));
    } else if (k == "E") {
      give(out, pieri_elementary(a, s));
    } else if (k == "Qp") {
      give(out, pieri_hl(a, s));
    } else if (k == "left") {
      NSymExpr hs = s ? NSymExpr::element(NSymBasis::H, {s}) : NSymExpr::one();
      give(out, to_basis(h_product(hs, immaculate_in_h(a)), NSymBasis::S));
    } else if (k == "Sd") {
      if (s == 0) give(out, QSymExpr::element(QSymBasis::Sd, a));
      else give(out, f_times_dual_immaculate(s, a));
    } else {
      throw std::invalid_argument("unknown pieri kind '" + k + "'");
    }
  });
}

ncsf_status ncsf_perp(const char* kind, int r, const char* alpha, ncsf_expr** out) {
  return guarded([&] {
    require(kind, "kind");
    const Composition a = comp(alpha, "alpha");
    if (r < 0) throw DomainError("r must be non-negative");
    const std::string k = kind;
    if (k == "e") give(out, perp_on_immaculate_e(r, IntTuple::of(a)));
    else if (k == "h") give(out, perp_on_immaculate_h(r, IntTuple::of(a)));
    else throw std::invalid_argument("unknown perp kind '" + k + "'");
  });
}

ncsf_status ncsf_transition_matrix(int n, const char* from, const char* to, ncsf_format f, char** out) {
  return guarded([&] {
    require(from, "from");
    require(to, "to");
    if (n < 0) throw DomainError("n must be non-negative");
    const Basis a = parse_basis(from);
    const Basis b = parse_basis(to);
    TransitionMatrix m;
    if (std::holds_alternative<SymBasis>(a) && std::get<SymBasis>(a) == SymBasis::s &&
        std::holds_alternative<QSymBasis>(b) && std::get<QSymBasis>(b) == QSymBasis::Sd) {
      m = schur_to_dual_immaculate_matrix(n);
    } else if (a.index() != b.index()) {
      throw Unsupported("no transition matrix between " + basis_name(a) + " and " + basis_name(b));
    } else if (a.index() == 0) {
      m = transition_matrix(n, std::get<NSymBasis>(a), std::get<NSymBasis>(b));
    } else if (a.index() == 1) {
      m = transition_matrix(n, std::get<QSymBasis>(a), std::get<QSymBasis>(b));
    } else {
      throw Unsupported("transition matrices between h and s are not provided");
    }
    give(out, format(to_json(m), m.to_text(), f));
  });
}

ncsf_status ncsf_emit_golden(const char* dir) {
  return guarded([&] {
    require(dir, "dir");
    const std::filesystem::path root(dir);
    std::filesystem::create_directories(root);
    auto write = [&](const TransitionMatrix& m) {
      const auto path = root / (m.from + "_to_" + m.to + "_n" + std::to_string(m.n) + ".txt");
      std::ofstream os(path, std::ios::binary);
      os << m.to_text();
      if (!os) throw std::runtime_error("cannot write " + path.string());
    };
    using B = NSymBasis;
    const std::pair<B, B> pairs[] = {{B::H, B::S},  {B::S, B::H},  {B::R, B::S},  {B::S, B::R},  {B::Qp, B::S},
                                     {B::S, B::Qp}, {B::Qp, B::H}, {B::H, B::Qp}, {B::Qp, B::R}, {B::R, B::Qp}};
    for (const auto& [a, b] : pairs) write(transition_matrix(4, a, b));
    write(schur_to_dual_immaculate_matrix(4));
  });
}

ncsf_status ncsf_tableaux(const char* shape, const char* content, ncsf_format f, char** out) {
  return guarded([&] {
    const Composition sh = comp(shape, "shape");
    const Composition c = content ? Composition::parse(content) : Composition();
    auto ts = content ? enumerate_immaculate(sh, c) : enumerate_standard(sh);
    nlohmann::ordered_json j{{"shape", comp_json(sh)}, {"count", ts.size()}};
    j["content"] = content ? comp_json(c) : nlohmann::ordered_json(nullptr);
    j["tableaux"] = nlohmann::ordered_json::array();
    for (const auto& t : ts) j["tableaux"].push_back(t.rows());
    std::string text = tableaux_text(ts);
    if (!content && !sh.empty()) {
      j["hook_count"] = count_standard_hook(sh).get_str();
      text = "hook formula: " + count_standard_hook(sh).get_str() + "\n" + text;
    }
    give(out, format(j, text, f));
  });
}

ncsf_status ncsf_skew(const char* alpha, const char* beta, const char* basis, ncsf_expr** out) {
  return guarded([&] {
    require(basis, "basis");
    Basis b = parse_basis(basis);
    const auto* qb = std::get_if<QSymBasis>(&b);
    if (!qb) throw DomainError("skew functions live in QSym (M, F, Sd or P)");
    give(out, skew_dual_immaculate(comp(alpha, "alpha"), comp(beta, "beta"), *qb));
  });
}

ncsf_status ncsf_skew_paths(const char* alpha, const char* beta, ncsf_format f, char** out) {
  return guarded([&] {
    const auto paths = enumerate_paths(comp(alpha, "alpha"), comp(beta, "beta"));
    std::string text = std::to_string(paths.size()) + " paths\n";
    nlohmann::ordered_json j{{"alpha", comp_json(comp(alpha, "alpha"))}, {"beta", comp_json(comp(beta, "beta"))},
                     {"count", paths.size()}};
    j["paths"] = nlohmann::ordered_json::array();
    for (const auto& p : paths) {
      const Composition d = path_descent_composition(p);
      text += p.to_string() + "  descents " + (d.empty() ? std::string("[]") : "[" + d.to_string() + "]") + "\n";
      nlohmann::ordered_json chain = nlohmann::ordered_json::array();
      for (const auto& c : p.chain()) chain.push_back(comp_json(c));
      j["paths"].push_back({{"labels", p.steps}, {"chain", chain}, {"descent", comp_json(d)}});
    }
    give(out, format(j, text, f));
  });
}

ncsf_status ncsf_check_names(char** out) {
  return guarded([&] {
    std::string s;
    for (const auto& n : check_names()) s += n + "\n";
    give(out, s);
  });
}

ncsf_status ncsf_check_run(const char* name, int max_n, ncsf_report** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = new ncsf_report{run_check(name, max_n)};
  });
}

int ncsf_report_passed(const ncsf_report* r) { return r && r->value.passed; }

ncsf_status ncsf_report_render(const ncsf_report* r, ncsf_format f, char** out) {
  return guarded([&] {
    require(r, "report");
    give(out, format(r->value.to_json(), r->value.to_text(), f));
  });
}

void ncsf_report_free(ncsf_report* r) { delete r; }

}  // extern "C"
