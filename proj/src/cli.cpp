#include <ncsf/ncsf.h>

#include <CLI11.hpp>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace {

constexpr int kUsageError = 2;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void ok(ncsf_status s) {
  if (s != NCSF_OK) throw Failure(std::string(ncsf_status_string(s)) + ": " + ncsf_last_error());
}

struct Expr {
  ncsf_expr* p = nullptr;
  Expr() = default;
  Expr(const Expr&) = delete;
  Expr& operator=(const Expr&) = delete;
  ~Expr() { ncsf_expr_free(p); }
  ncsf_expr** out() {
    ncsf_expr_free(p);
    p = nullptr;
    return &p;
  }
};

std::string take(char* s) {
  std::unique_ptr<char, decltype(&ncsf_string_free)> g(s, ncsf_string_free);
  return s ? std::string(s) : std::string();
}

struct Options {
  bool json = false;
  std::string from, to, basis, alpha, beta, out;
  int s = 0, n = 0, max_n = 0;
  std::optional<long> q_at;
  bool left = false, elementary = false, golden = false, paths = false;
  std::vector<std::string> args;
};

ncsf_format fmt(const Options& o) { return o.json ? NCSF_JSON : NCSF_TEXT; }

void print_expr(const Expr& e, const Options& o) {
  char* s = nullptr;
  ok(ncsf_expr_render(e.p, fmt(o), &s));
  std::cout << take(s) << "\n";
}

void print_text(char* s) {
  std::string t = take(s);
  std::cout << t;
  if (!t.empty() && t.back() != '\n') std::cout << "\n";
}

// An index with --from, otherwise a full expression.
void load(Expr& e, const std::string& arg, const std::string& from) {
  if (from.empty()) ok(ncsf_expr_parse(arg.c_str(), e.out()));
  else ok(ncsf_expr_basis_element(from.c_str(), arg.c_str(), e.out()));
}

void maybe_specialize(Expr& e, const Options& o) {
  if (!o.q_at) return;
  Expr t;
  ok(ncsf_expr_specialize_q(e.p, *o.q_at, t.out()));
  std::swap(e.p, t.p);
}

int run_convert(const Options& o) {
  if (o.args.size() != 1) throw CLI::ValidationError("convert", "expects one index or expression");
  if (o.to.empty()) throw CLI::RequiredError("--to");
  Expr e, r;
  load(e, o.args[0], o.from);
  ok(ncsf_expr_convert(e.p, o.to.c_str(), r.out()));
  maybe_specialize(r, o);
  print_expr(r, o);
  return 0;
}

int run_product(const Options& o) {
  if (o.args.size() < 2) throw CLI::ValidationError("product", "expects at least two factors");
  Expr acc;
  load(acc, o.args[0], o.from);
  for (std::size_t i = 1; i < o.args.size(); ++i) {
    Expr f, r;
    load(f, o.args[i], o.from);
    ok(ncsf_expr_product(acc.p, f.p, r.out()));
    std::swap(acc.p, r.p);
  }
  if (!o.to.empty()) {
    Expr r;
    ok(ncsf_expr_convert(acc.p, o.to.c_str(), r.out()));
    std::swap(acc.p, r.p);
  }
  maybe_specialize(acc, o);
  print_expr(acc, o);
  return 0;
}

int run_pieri(const Options& o) {
  std::string kind = o.basis.empty() ? "S" : o.basis;
  if (o.left && o.elementary) throw CLI::ValidationError("pieri", "--left and --elementary are exclusive");
  if (o.left) {
    if (kind != "S") throw CLI::ValidationError("pieri", "--left applies to the S basis");
    kind = "left";
  } else if (o.elementary) {
    if (kind != "S") throw CLI::ValidationError("pieri", "--elementary applies to the S basis");
    kind = "E";
  } else if (kind != "S" && kind != "Qp" && kind != "Sd") {
    throw CLI::ValidationError("pieri", "--basis must be S, Qp or Sd");
  }
  Expr r;
  ok(ncsf_pieri(kind.c_str(), o.alpha.c_str(), o.s, r.out()));
  maybe_specialize(r, o);
  print_expr(r, o);
  return 0;
}

int run_tableaux(const Options& o) {
  char* s = nullptr;
  ok(ncsf_tableaux(o.alpha.c_str(), o.beta.empty() ? nullptr : o.beta.c_str(), fmt(o), &s));
  print_text(s);
  return 0;
}

int run_matrix(const Options& o) {
  if (o.golden) {
    if (o.out.empty()) throw CLI::RequiredError("--out");
    ok(ncsf_emit_golden(o.out.c_str()));
    return 0;
  }
  if (o.from.empty() || o.to.empty()) throw CLI::ValidationError("matrix", "needs --from and --to (or --golden)");
  char* s = nullptr;
  ok(ncsf_transition_matrix(o.n, o.from.c_str(), o.to.c_str(), fmt(o), &s));
  print_text(s);
  return 0;
}

int run_skew(const Options& o) {
  if (o.paths) {
    char* s = nullptr;
    ok(ncsf_skew_paths(o.alpha.c_str(), o.beta.c_str(), fmt(o), &s));
    print_text(s);
    return 0;
  }
  Expr r;
  ok(ncsf_skew(o.alpha.c_str(), o.beta.c_str(), o.to.empty() ? "F" : o.to.c_str(), r.out()));
  print_expr(r, o);
  return 0;
}

int run_chi(const Options& o) {
  if (o.args.size() != 1) throw CLI::ValidationError("chi", "expects one index or expression");
  Expr e, r;
  load(e, o.args[0], o.from);
  ok(ncsf_chi(e.p, o.to.empty() ? "s" : o.to.c_str(), r.out()));
  print_expr(r, o);
  return 0;
}

int run_check(const Options& o) {
  if (o.args.size() != 1) throw CLI::ValidationError("check", "expects one check name");
  ncsf_report* rep = nullptr;
  ok(ncsf_check_run(o.args[0].c_str(), o.max_n, &rep));
  std::unique_ptr<ncsf_report, decltype(&ncsf_report_free)> g(rep, ncsf_report_free);
  char* s = nullptr;
  ok(ncsf_report_render(rep, fmt(o), &s));
  print_text(s);
  return ncsf_report_passed(rep) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Immaculate and Hall-Littlewood bases of NSym and QSym"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", ncsf_version());
  Options o;
  app.add_flag("--json", o.json, "JSON output")->configurable(false);

  auto basis_opts = [&](CLI::App* c) {
    c->add_option("--from", o.from, "source basis (positional arguments become indices)");
    c->add_option("--to", o.to, "target basis");
  };
  auto positional = [&](CLI::App* c, const char* what) { c->add_option("args", o.args, what); };
  auto json_flag = [&](CLI::App* c) { c->add_flag("--json", o.json, "JSON output"); };
  auto q_at = [&](CLI::App* c) { c->add_option("--q-at", o.q_at, "specialize q to an integer"); };

  auto* convert = app.add_subcommand("convert", "change of basis");
  basis_opts(convert);
  q_at(convert);
  positional(convert, "index (with --from) or expression");

  auto* product = app.add_subcommand("product", "product of two or more elements");
  basis_opts(product);
  q_at(product);
  positional(product, "factors");

  auto* pieri = app.add_subcommand("pieri", "Pieri expansions");
  pieri->add_option("--basis", o.basis, "S (S_alpha H_s), Qp (Qp_alpha H_s) or Sd (F_s Sd_alpha)");
  pieri->add_option("--alpha", o.alpha, "composition")->required();
  pieri->add_option("--s", o.s, "row length")->required()->check(CLI::NonNegativeNumber);
  pieri->add_flag("--left", o.left, "H_s S_alpha");
  pieri->add_flag("--elementary", o.elementary, "S_alpha S_{1^s}");
  q_at(pieri);

  auto* tableaux = app.add_subcommand("tableaux", "immaculate tableaux");
  tableaux->add_option("--alpha", o.alpha, "shape")->required();
  tableaux->add_option("--beta", o.beta, "content (default: standard tableaux)");

  auto* matrix = app.add_subcommand("matrix", "transition matrices");
  matrix->add_option("--n", o.n, "degree")->check(CLI::NonNegativeNumber);
  basis_opts(matrix);
  matrix->add_flag("--golden", o.golden, "write the n=4 reference matrices");
  matrix->add_option("--out", o.out, "directory for --golden");

  auto* skew = app.add_subcommand("skew", "skew dual immaculate functions");
  skew->add_option("--alpha", o.alpha, "outer composition")->required();
  skew->add_option("--beta", o.beta, "inner composition")->required();
  skew->add_option("--to", o.to, "M, F, Sd or P (default F)");
  skew->add_flag("--paths", o.paths, "list the maximal chains instead");

  auto* chi = app.add_subcommand("chi", "forgetful map to symmetric functions");
  basis_opts(chi);
  positional(chi, "index (with --from) or expression");

  auto* check = app.add_subcommand("check", "identity and conjecture checks");
  check->add_option("--max-n", o.max_n, "largest degree")->required()->check(CLI::PositiveNumber);
  positional(check, "check name");
  check->footer([] {
    char* s = nullptr;
    ncsf_check_names(&s);
    return "checks:\n" + take(s);
  }());

  for (auto* c : {convert, product, pieri, tableaux, matrix, skew, chi, check}) json_flag(c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*convert) return run_convert(o);
    if (*product) return run_product(o);
    if (*pieri) return run_pieri(o);
    if (*tableaux) return run_tableaux(o);
    if (*matrix) return run_matrix(o);
    if (*skew) return run_skew(o);
    if (*chi) return run_chi(o);
    return run_check(o);
  } catch (const CLI::Error& e) {
    std::cerr << "ncsf: " << e.what() << "\n";
    return kUsageError;
  } catch (const Failure& e) {
    std::cerr << "ncsf: " << e.what() << "\n";
    return kUsageError;
  }
}
