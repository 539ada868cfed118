// Command-line front end. Exit codes: 0 success, 1 mathematical "none" or an
// exhausted limit, 2 bad usage or input, 3 internal error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "logcv/cfinite.hpp"
#include "logcv/certify.hpp"
#include "logcv/convolve.hpp"
#include "logcv/fixedpoint.hpp"
#include "logcv/io.hpp"
#include "logcv/modular.hpp"

using namespace logcv;
using io::Json;

namespace {

constexpr int kOk = 0, kNone = 1, kUsage = 2, kInternal = 3;

struct Options {
  std::string format = "json";

  std::string seq;
  bool prefix = false;
  int depth = 10;

  int max_iter = 100;
  std::size_t max_bits = 0;

  int m = 1;
  std::string k, beta, gamma, fix_prefix;
  std::size_t terms = 12;
  bool search = false;
  long bound = 6;

  long s = 0, r = 0;

  int max_order = 5, degree = 0, margin = 5;
  std::string modular;
  std::string lm_prefix;

  std::string polys_file, out_file;
  int m_max = 10, lambda_max = 100;

  int n_max = 10;
};

class Usage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Sequence input_sequence(const std::string& arg, SeqKind kind = SeqKind::FinitePolynomial) {
  if (arg.empty()) throw Usage("--seq is required");
  if (arg == "-") return io::read_sequence(read_all(std::cin), kind);
  return io::read_sequence(arg, kind);
}

void emit(const Options& o, const Json& j, const std::string& csv) {
  if (o.format == "csv") std::cout << csv << '\n';
  else std::cout << j.dump(2) << '\n';
}

int run_check(const Options& o) {
  const Sequence a = input_sequence(o.seq, o.prefix ? SeqKind::PrefixOfInfinite : SeqKind::FinitePolynomial);
  const DepthResult d = log_concavity_depth(a, o.depth);
  Json j = io::to_json(d);
  if (a.all_positive()) {
    auto r = r_factor_supremum(a);
    j["r_factor_supremum"] = r ? io::to_json(*r) : Json("inf");
  }
  j["palindromic"] = is_palindromic(a);
  j["internal_zeros"] = has_internal_zeros(a);
  emit(o, j, std::to_string(d.depth) + (d.saturated ? "+" : ""));
  return kOk;
}

int run_certify(const Options& o) {
  const Sequence a = input_sequence(o.seq);
  const Certificate c = certify_infinite(a, o.max_iter, o.max_bits);
  emit(o, io::to_json(c), to_string(c.kind) + "," + std::to_string(c.m));
  return c.kind == CertKind::Unknown ? kNone : kOk;
}

int run_fixpoint(const Options& o) {
  if (o.search) {
    const auto hits = search_integer_fixed(o.m, o.bound, o.terms);
    Json j{{"m", o.m}, {"bound", o.bound}, {"terms", o.terms}, {"hits", hits}};
    std::string csv;
    for (const auto& h : hits) {
      for (std::size_t i = 0; i < h.size(); ++i) csv += (i ? "," : "") + std::to_string(h[i]);
      csv += '\n';
    }
    if (!csv.empty()) csv.pop_back();
    emit(o, j, csv);
    return hits.empty() ? kNone : kOk;
  }
  const int given = !o.k.empty() + (!o.beta.empty() || !o.gamma.empty()) + !o.fix_prefix.empty();
  if (given != 1) throw Usage("give exactly one of --k, --beta/--gamma, --prefix");
  FixedFamily family;
  family.m = o.m;
  if (!o.k.empty()) {
    family.params = FixedFamily::ByK{Scalar::parse(o.k)};
  } else if (!o.fix_prefix.empty()) {
    family.params = FixedFamily::ByPrefix{io::read_sequence(o.fix_prefix, SeqKind::PrefixOfInfinite)};
  } else {
    if (o.beta.empty() || o.gamma.empty()) throw Usage("--beta and --gamma go together");
    family.params = FixedFamily::ByBetaGamma{Scalar::parse(o.beta), Scalar::parse(o.gamma)};
  }
  const Sequence a = generate(family, o.terms);
  emit(o, Json{{"m", o.m}, {"terms", io::to_json(a)}}, io::to_csv(a));
  return kOk;
}

int run_psr(const Options& o) {
  const Sequence p = p_sr(o.s, o.r);
  Json j{{"s", o.s}, {"r", o.r}, {"coefficients", io::to_json(p)}};
  if (o.r == 1) {
    auto t = p_s_threshold(o.s);
    j["r_threshold"] = t ? io::to_json(*t) : Json("inf");
  }
  emit(o, j, io::to_csv(p));
  return kOk;
}

template <class Z>
std::vector<Z> residues(const Options& o) {
  if (!o.lm_prefix.empty()) {
    const Sequence prefix = io::read_sequence(o.lm_prefix);
    std::vector<Z> start;
    for (const auto& x : prefix.entries()) {
      if (!x.is_rational()) throw DomainError("modular terms need rational entries");
      start.emplace_back(x.rational());
    }
    return extend_fixed_lm_values(std::move(start), o.m, o.terms);
  }
  std::vector<Z> out;
  for (const auto& x : input_sequence(o.seq, SeqKind::PrefixOfInfinite).entries()) {
    if (!x.is_rational()) throw DomainError("modular terms need rational entries");
    out.emplace_back(x.rational());
  }
  return out;
}

template <class Z>
int run_guess_mod(const Options& o, const char* name) {
  const auto t = residues<Z>(o);
  const bool none = certify_no_recurrence_mod(t, o.max_order, o.degree, o.margin);
  Json j{{"prime", name}, {"terms", t.size()}, {"max_order", o.max_order},
         {"degree", o.degree}, {"certified_none", none}};
  emit(o, j, none ? "none" : "inconclusive");
  return none ? kOk : kNone;
}

int run_guess(const Options& o) {
  if (!o.modular.empty()) {
    if (o.modular == "61") return run_guess_mod<Z61>(o, "2^61-1");
    if (o.modular == "62") return run_guess_mod<Z62>(o, "2^62-57");
    throw Usage("--modular takes 61 or 62");
  }
  if (!o.lm_prefix.empty()) throw Usage("--lm-prefix needs --modular");
  const Sequence a = input_sequence(o.seq, SeqKind::PrefixOfInfinite);
  auto rec = o.degree == 0 ? guess_constant_rec(a.entries(), o.max_order, o.margin)
                           : guess_polyrec(a.entries(), o.max_order, o.degree, o.margin);
  if (!rec) {
    emit(o, Json{{"recurrence", nullptr}}, "none");
    return kNone;
  }
  std::string csv;
  for (const auto& p : rec->coeffs) {
    for (const auto& c : p) csv += c.str() + ",";
  }
  csv.pop_back();
  emit(o, Json{{"recurrence", io::to_json(*rec)}}, csv);
  return kOk;
}

int run_power_table(const Options& o) {
  std::ifstream in(o.polys_file);
  if (!in) throw Usage("cannot read --polys file " + o.polys_file);
  const auto polys = io::read_sequence_list(in);
  if (polys.empty()) throw Usage("--polys file lists no polynomials");
  const auto rows = exponent_table(polys, o.m_max, o.lambda_max, o.max_iter);
  std::string text;
  if (o.format == "csv") {
    text = io::table_csv(rows, o.m_max);
  } else {
    Json j = Json::array();
    for (const auto& r : rows) j.push_back(io::to_json(r));
    text = j.dump(2) + "\n";
  }
  if (o.out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.out_file);
    if (!out) throw Usage("cannot write --out file " + o.out_file);
    out << text;
  }
  return kOk;
}

int run_probe(const Options& o) {
  const Sequence p = input_sequence(o.seq);
  const auto rows = square_depth_probe(p, o.n_max, o.max_iter);
  Json j = Json::array();
  std::string csv = "n,kind,m,depth";
  for (const auto& r : rows) {
    j.push_back(io::to_json(r));
    csv += "\n" + std::to_string(r.n) + "," + to_string(r.cert.kind) + "," + std::to_string(r.cert.m) +
           "," + (r.depth ? std::to_string(*r.depth) : "");
  }
  emit(o, j, csv);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of multiply log-concave sequences"};
  app.set_config("--config", "", "key=value defaults (INI sections per subcommand)");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* check = app.add_subcommand("check", "depth of m-log-concavity and r-factor supremum");
  check->add_option("--seq", o.seq, "comma-separated scalars, or - for stdin")->required();
  check->add_option("--depth", o.depth, "largest m tested");
  check->add_flag("--prefix", o.prefix, "treat the input as a prefix of an infinite sequence");

  auto* certify = app.add_subcommand("certify", "decide infinite log-concavity with a certificate");
  certify->add_option("--seq", o.seq, "comma-separated scalars, or - for stdin")->required();
  certify->add_option("--max-iter", o.max_iter, "iterates of L before giving up");
  certify->add_option("--max-bits", o.max_bits, "cap on rational entry size (0: none)");

  auto* fixpoint = app.add_subcommand("fixpoint", "sequences fixed by L^m");
  fixpoint->add_option("--m", o.m, "power of L");
  fixpoint->add_option("--k", o.k, "m = 1 family parameter a_1");
  fixpoint->add_option("--beta", o.beta, "m = 2 family parameter a_1");
  fixpoint->add_option("--gamma", o.gamma, "m = 2 family parameter a_2");
  fixpoint->add_option("--prefix", o.fix_prefix, "initial terms a_0..a_m, a_0 = 1");
  fixpoint->add_option("--terms", o.terms, "number of terms");
  fixpoint->add_flag("--search", o.search, "bounded search for integer L^m-fixed prefixes");
  fixpoint->add_option("--bound", o.bound, "search bound on a_1..a_m");

  auto* psr = app.add_subcommand("psr", "coefficients of p_{s,r}");
  psr->add_option("--s", o.s, "root of unity order")->required();
  psr->add_option("--r", o.r, "numerator, s != 2r")->required();

  auto* guess = app.add_subcommand("guess", "guess a linear recurrence, or certify there is none");
  guess->add_option("--seq", o.seq, "terms, or - for stdin");
  guess->add_option("--max-order", o.max_order, "largest order tried");
  guess->add_option("--degree", o.degree, "coefficient degree (0: constant)");
  guess->add_option("--margin", o.margin, "extra equations beyond the unknowns");
  guess->add_option("--modular", o.modular, "work mod 2^61-1 (61) or 2^62-57 (62)");
  guess->add_option("--lm-prefix", o.lm_prefix, "with --modular: terms of the L^m-fixed extension of this prefix");
  guess->add_option("--m", o.m, "power of L for --lm-prefix");
  guess->add_option("--terms", o.terms, "number of terms for --lm-prefix");

  auto* table = app.add_subcommand("power-table", "minimal exponents lambda for p^lambda");
  table->add_option("--polys", o.polys_file, "file with one comma-separated polynomial per line")->required();
  table->add_option("--m-max", o.m_max, "largest finite m column");
  table->add_option("--lambda-max", o.lambda_max, "largest exponent tried");
  table->add_option("--max-iter", o.max_iter, "certify iterations per exponent");
  table->add_option("--out", o.out_file, "output file (default stdout)");

  auto* probe = app.add_subcommand("probe", "depth or certificate for each power p^n");
  probe->add_option("--seq", o.seq, "coefficients of p, or - for stdin")->required();
  probe->add_option("--n-max", o.n_max, "largest power");
  probe->add_option("--max-iter", o.max_iter, "certify iterations per power");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return run_check(o);
    if (*certify) return run_certify(o);
    if (*fixpoint) return run_fixpoint(o);
    if (*psr) return run_psr(o);
    if (*guess) {
      if (o.seq.empty() && o.lm_prefix.empty()) throw Usage("guess needs --seq or --lm-prefix");
      return run_guess(o);
    }
    if (*table) return run_power_table(o);
    if (*probe) return run_probe(o);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const OrderOverflow& e) {
    std::cerr << e.what() << '\n';
    return kNone;
  } catch (const SingularStep& e) {
    std::cerr << e.what() << '\n';
    return kNone;
  } catch (const PrecisionExhausted& e) {
    std::cerr << e.what() << '\n';
    return kNone;
  } catch (const Error& e) {
    // every other library error is raised by a bad argument or input
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
