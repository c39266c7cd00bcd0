// gfdiag: generating functions and diagonals of binomial convolutions.
//
// Exit codes: 0 success, 1 a claim missed its recorded expectation,
// 2 usage or parse error, 3 domain error, 4 method-assumption violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "gfdiag/claims.hpp"
#include "gfdiag/error.hpp"
#include "gfdiag/gf_builder.hpp"
#include "gfdiag/poly_text.hpp"
#include "gfdiag/recurrence.hpp"
#include "gfdiag/report_json.hpp"
#include "gfdiag/residue.hpp"
#include "gfdiag/series.hpp"

using namespace gfdiag;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitExpectation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitMethod = 4;

std::size_t default_n() {
  if (const char* env = std::getenv("GFDIAG_N")) {
    try {
      long v = std::stol(env);
      if (v >= 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring malformed GFDIAG_N='" << env << "'\n";
  }
  return 200;
}

struct MethodError : std::runtime_error {
  json detail;
  MethodError(const std::string& what, json d) : std::runtime_error(what), detail(std::move(d)) {}
};

std::string join(const std::vector<Rational>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + to_string(v[i]);
  return out;
}

json string_array(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

void emit(bool as_json, const std::string& command, const json& result, const std::string& text) {
  if (as_json)
    std::cout << envelope(command, kExitOk, result).dump(2) << "\n";
  else
    std::cout << text;
}

SequenceSpec read_spec(int k, const std::string& init, const std::string& coeffs) {
  std::vector<Rational> initial = parse_rational_list(init);
  if (static_cast<int>(initial.size()) != k)
    throw ParseError("--init needs exactly " + std::to_string(k) + " terms, got " + std::to_string(initial.size()));
  if (coeffs.empty()) return SequenceSpec(initial);
  std::vector<Rational> c = parse_rational_list(coeffs);
  if (static_cast<int>(c.size()) != k) throw ParseError("--coeffs needs exactly " + std::to_string(k) + " values");
  return SequenceSpec(c, initial);
}

// ---------------------------------------------------------------------------

struct Options {
  bool json = false;
  std::size_t n = default_n();
  std::string text;
  int k = 2;
  std::string init;
  std::string coeffs;
  std::string catalog_id;
  std::string method = "both";
  std::string terms;
  std::string claim;
  bool all = false;
};

int cmd_expand(const Options& o) {
  UniRatFunc f = parse_uni_ratfunc(o.text);
  SeriesTruncated s = series_of_rational(f, o.n);
  emit(o.json, "expand", {{"input", to_string(f)}, {"n", o.n}, {"coefficients", string_array(s.coeffs)}},
       join(s.coeffs) + "\n");
  return kExitOk;
}

int cmd_convolve(const Options& o) {
  SequenceSpec spec = read_spec(o.k, o.init, o.coeffs);
  auto seq = generate_sequence(spec, o.n);
  auto conv = binomial_convolutions(seq, seq, o.n);
  emit(o.json, "convolve",
       {{"k", o.k}, {"initial", string_array(spec.initial)}, {"n", o.n}, {"values", string_array(conv)}},
       join(conv) + "\n");
  return kExitOk;
}

BiRatFunc diagonal_input(const Options& o) {
  if (!o.catalog_id.empty()) {
    if (!is_bivariate_catalog_id(o.catalog_id)) throw ParseError("unknown bivariate catalog id: " + o.catalog_id);
    return catalog_bivariate(o.catalog_id);
  }
  if (o.text.empty()) throw ParseError("diagonal needs --catalog or --gf-text");
  return parse_bi_ratfunc(o.text, 'x', 'y');
}

std::optional<UniRatFunc> series_method(const BiRatFunc& f, std::size_t n) {
  SeriesTruncated diag = diagonal_series(f, n);
  if (n < 4) return std::nullopt;
  auto rec = find_min_recurrence(diag.coeffs);
  if (!rec) return std::nullopt;
  return reduced_form(recurrence_to_gf(*rec));
}

int cmd_diagonal(const Options& o) {
  if (o.method != "series" && o.method != "residue" && o.method != "both")
    throw ParseError("--method must be series, residue or both");
  BiRatFunc f = diagonal_input(o);
  json result{{"input", to_string(f)}, {"method", o.method}};
  std::ostringstream text;
  text << "input: " << to_string(f) << "\n";

  std::optional<UniRatFunc> from_series;
  if (o.method != "residue") {
    from_series = series_method(f, o.n);
    if (!from_series)
      throw MethodError("no linear recurrence of order <= " + std::to_string(o.n / 2) + " in " + std::to_string(o.n) +
                            " diagonal terms",
                        result);
    result["series_gf"] = to_string(*from_series);
    text << "series:  " << to_string(*from_series) << "\n";
  }
  if (o.method != "series") {
    DiagonalResult d = diagonal_rational(f, o.method == "both" ? std::min<std::size_t>(o.n, 100) : 0);
    result["residue_gf"] = to_string(d.gf);
    result["report"] = to_json(d.report);
    text << "residue: " << to_string(d.gf) << "\n";
    for (const auto& p : d.report.poles)
      text << "  pole factor " << to_string(p.factor) << " (degree " << p.degree() << ", mult " << p.multiplicity
           << "): " << (p.kept ? "kept" : p.split ? "split (bounded and unbounded roots)" : "discarded") << ", leading t-coefficient at z=0: " << to_string(p.reason)
           << "\n";
    if (d.report.status != DiagonalStatus::ok && o.method == "residue")
      throw MethodError("method-assumption-violated: a pole factor has both bounded and unbounded roots", result);
    if (o.method == "both") {
      bool agree = d.report.status == DiagonalStatus::ok && same_function(d.gf, *from_series);
      result["cross_check"] = agree ? "pass" : "fail";
      text << "cross-check: " << (agree ? "pass" : "fail") << "\n";
      if (!agree) {
        std::string why = d.report.first_mismatch
                              ? "residue and series diagonals differ at n = " + std::to_string(*d.report.first_mismatch)
                              : "residue and series generating functions differ";
        throw MethodError("method-assumption-violated: " + why, result);
      }
    }
  }
  emit(o.json, "diagonal", result, text.str());
  return kExitOk;
}

int cmd_guess(const Options& o) {
  std::vector<Rational> terms;
  if (!o.terms.empty()) {
    terms = parse_rational_list(o.terms);
  } else {
    if (o.init.empty()) throw ParseError("guess-gf needs --terms or --k/--init");
    auto seq = generate_sequence(read_spec(o.k, o.init, o.coeffs), o.n);
    terms = binomial_convolutions(seq, seq, o.n);
  }
  if (terms.size() < 4) throw ParseError("guess-gf needs at least 4 terms");
  auto rec = find_min_recurrence(terms);
  if (!rec) throw MethodError("no recurrence of order <= " + std::to_string(terms.size() / 2), {{"terms", terms.size()}});
  UniRatFunc gf = reduced_form(recurrence_to_gf(*rec));
  json result{{"order", rec->order()},
              {"coefficients", string_array(rec->coeffs)},
              {"initial", string_array(rec->initial)},
              {"gf", to_string(gf)},
              {"terms", terms.size()},
              {"evidence_margin", evidence_margin(*rec, terms.size())}};
  std::ostringstream text;
  text << "order " << rec->order() << ", coefficients " << join(rec->coeffs, ", ") << "\n"
       << "gf: " << to_string(gf) << "\n"
       << "evidence margin: " << evidence_margin(*rec, terms.size()) << " (" << terms.size() << " terms)\n";
  emit(o.json, "guess-gf", result, text.str());
  return kExitOk;
}

int cmd_catalog(const Options& o) {
  json gfs = json::array(), claims = json::array();
  std::ostringstream text;
  text << "generating functions:\n";
  for (const auto& e : gf_catalog()) {
    std::string formula = e.bivariate ? to_string(catalog_bivariate(e.id)) : to_string(printed_gf(e.id));
    gfs.push_back({{"id", e.id}, {"description", e.description}, {"bivariate", e.bivariate}, {"gf", formula}});
    text << "  " << e.id << "  " << e.description << "\n      " << formula << "\n";
  }
  text << "claims:\n";
  for (const auto& c : claim_catalog()) {
    claims.push_back({{"id", c.id},
                      {"description", c.description},
                      {"expected_status", to_string(c.expected)},
                      {"note", c.expectation_note}});
    text << "  " << c.id << "  [expected " << to_string(c.expected) << "]  " << c.description << "\n";
  }
  emit(o.json, "catalog", {{"generating_functions", gfs}, {"claims", claims}}, text.str());
  return kExitOk;
}

int cmd_verify(const Options& o) {
  if (o.all == !o.claim.empty()) throw ParseError("verify needs exactly one of --all or --claim");
  std::vector<ClaimReport> reports;
  if (o.all) {
    reports = run_all(o.n);
  } else {
    try {
      reports = run_claim(o.claim, o.n);
    } catch (const std::out_of_range& e) {
      throw ParseError(e.what());
    }
  }
  const bool ok = all_as_expected(reports);
  const int code = ok ? kExitOk : kExitExpectation;
  if (o.json) {
    json list = json::array();
    for (const auto& r : reports) list.push_back(to_json(r));
    std::cout << envelope("verify", code, {{"n", o.n}, {"all_as_expected", ok}, {"claims", list}}).dump(2) << "\n";
    return code;
  }
  for (const auto& r : reports) {
    std::cout << (r.status == ClaimStatus::pass ? "PASS " : "FAIL ") << r.id << "  (expected " << to_string(r.expected)
              << (r.matches_expectation() ? ", as expected" : ", UNEXPECTED") << ")\n";
    if (r.first_mismatch)
      std::cout << "     first mismatch at " << *r.first_mismatch << ": lhs = " << r.lhs << ", rhs = " << r.rhs << "\n";
    if (!r.note.empty()) std::cout << "     " << r.note << "\n";
  }
  std::cout << (ok ? "all claims match their recorded expectations\n" : "some claims deviate from expectations\n");
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binomial-convolution generating functions and their diagonals"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "truncation order (default 200 or $GFDIAG_N)");
    sub->add_flag("--json", o.json, "machine-readable output");
  };

  auto* expand = app.add_subcommand("expand", "Taylor coefficients of a univariate rational function");
  expand->add_option("gf", o.text, "rational function, e.g. \"1/(1-2*z+2*z^3)\"")->required();
  common(expand);

  auto* convolve = app.add_subcommand("convolve", "sum_k C(n,k) a_k a_(n-k) for a linear recurrence");
  convolve->add_option("--k", o.k, "recurrence order")->required();
  convolve->add_option("--init", o.init, "initial terms, comma separated")->required();
  convolve->add_option("--coeffs", o.coeffs, "recurrence coefficients (default all 1)");
  common(convolve);

  auto* diagonal = app.add_subcommand("diagonal", "diagonal of a bivariate rational function in x, y");
  diagonal->add_option("--catalog", o.catalog_id, "catalog id (see `catalog`)");
  diagonal->add_option("--gf-text", o.text, "rational function in x and y");
  diagonal->add_option("--method", o.method, "series, residue or both")->default_val("both");
  common(diagonal);

  auto* guess = app.add_subcommand("guess-gf", "detect a linear recurrence and its rational generating function");
  guess->add_option("--terms", o.terms, "sequence terms, comma separated");
  guess->add_option("--k", o.k, "recurrence order of the convolved sequence");
  guess->add_option("--init", o.init, "initial terms of the convolved sequence");
  guess->add_option("--coeffs", o.coeffs, "recurrence coefficients (default all 1)");
  common(guess);

  auto* catalog = app.add_subcommand("catalog", "list generating functions and claims");
  catalog->add_flag("--json", o.json, "machine-readable output");

  auto* verify = app.add_subcommand("verify", "check the catalogued identities");
  verify->add_flag("--all", o.all, "run every claim");
  verify->add_option("--claim", o.claim, "claim id or base id");
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  auto fail = [&](int code, const std::string& kind, const std::string& msg, json detail = json::object()) {
    if (o.json)
      std::cout << envelope(app.get_subcommands().front()->get_name(), code,
                            {{"error", kind}, {"message", msg}, {"detail", detail}})
                       .dump(2)
                << "\n";
    std::cerr << "error: " << msg << "\n";
    return code;
  };

  try {
    if (*expand) return cmd_expand(o);
    if (*convolve) return cmd_convolve(o);
    if (*diagonal) return cmd_diagonal(o);
    if (*guess) return cmd_guess(o);
    if (*catalog) return cmd_catalog(o);
    if (*verify) return cmd_verify(o);
  } catch (const ParseError& e) {
    return fail(kExitUsage, "parse", e.what());
  } catch (const MethodError& e) {
    return fail(kExitMethod, "method-assumption-violated", e.what(), e.detail);
  } catch (const DomainError& e) {
    return fail(kExitDomain, "domain", e.what());
  }
  return kExitUsage;
}
