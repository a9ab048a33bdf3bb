#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <memory>
#include <sstream>

#include "pws/algebra.hpp"
#include "pws/combinatorics.hpp"
#include "pws/filters.hpp"
#include "pws/quotient.hpp"
#include "pws/setexpr.hpp"
#include "pws/vdw.hpp"
#include "pws/windowset.hpp"

namespace pws::cli {

namespace {

struct Options {
  bool porcelain = false;
  bool trace = false;
  std::size_t horizon = 0;
  Nat stages = 200;
  std::size_t lcm_cap = 0;
  Nat k = 3;
  std::size_t modulus = 5;
  std::string kind = "uf";
  std::string base = "N";
  Nat count = 20;
  bool closing = false;
  std::vector<std::string> exprs;
};

template <class Seq>
std::string list(const Seq& xs) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& x : xs) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << ']';
  return os.str();
}

const char* flag(bool b) { return b ? "true" : "false"; }

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  void note(const std::string& prose) {
    if (!opt_.porcelain) out_ << "# " << prose << '\n';
  }

  int classify() {
    const EpSet s = eval_expr(opt_.exprs.at(0));
    note("classify " + to_string(s));
    out_ << "thick=" << flag(is_thick(s)) << " syndetic=" << flag(is_syndetic(s)) << " gap=";
    if (is_syndetic(s)) {
      out_ << gap_bound(s);
    } else {
      out_ << "none";
    }
    out_ << " pws=" << flag(is_piecewise_syndetic(s)) << " witness=";
    if (is_piecewise_syndetic(s)) {
      out_ << list(pws_witness(s));
    } else {
      out_ << "none";
    }
    out_ << '\n';
    return ok;
  }

  int apk() {
    const EpSet a = eval_expr(opt_.exprs.at(0));
    const EpSet r = ap_k(a, opt_.k);
    note("AP_" + std::to_string(opt_.k) + " of " + to_string(a));
    out_ << "k=" << opt_.k << " apk=" << to_string(r) << '\n';
    std::size_t shown = 0;
    for (Nat x = 1; shown < 5 && x <= r.preperiod_len() + 4 * r.period_len(); ++x) {
      if (!r.contains(x)) continue;
      out_ << "witness x=" << x << " y=" << *ap_witness_gap(a, opt_.k, x) << '\n';
      ++shown;
    }
    const std::size_t check = a.preperiod_len() + 3 * a.period_len();
    const std::size_t h = opt_.horizon != 0
                              ? opt_.horizon
                              : std::max(a.preperiod_len() + 8 * (opt_.k + 2) * a.period_len(),
                                         check + opt_.k * (a.preperiod_len() + a.period_len()));
    const WindowSet oracle = oracle_ap_k(a, opt_.k, h);
    bool agrees = true;
    for (Nat n = 1; n <= std::min(check, h); ++n) agrees &= oracle.contains(n) == r.contains(n);
    out_ << "oracle_horizon=" << h << " checked=" << std::min(check, h)
         << " oracle_agrees=" << flag(agrees) << '\n';
    return agrees ? ok : verification_failed;
  }

  void print_trace(const ClaimTrace& tr, std::size_t depth) {
    out_ << "claim depth=" << depth << " terms=" << tr.terms << " floor=" << tr.floor
         << " margin=" << tr.margin << " B=" << to_string(tr.set) << " B_U=" << to_string(tr.b_u)
         << " F=" << list(tr.cover) << '\n';
    for (std::size_t j = 0; j < tr.rounds.size(); ++j) {
      const ClaimRound& r = tr.rounds[j];
      for (const auto& in : r.inner) print_trace(in, depth + 1);
      out_ << "round depth=" << depth << " j=" << j + 1 << " q=" << r.shift << " y=" << r.gap
           << " x=" << r.pick;
      if (r.next) out_ << " B_j=" << to_string(*r.next);
      out_ << '\n';
    }
    if (tr.repeat) out_ << "repeat depth=" << depth << " m=" << tr.repeat->first << " n=" << tr.repeat->second << '\n';
    out_ << "result depth=" << depth << " q=" << tr.shift << " y=" << tr.gap << '\n';
  }

  void print_evidence(const TheoremEvidence& ev) {
    out_ << "set=" << to_string(ev.set) << " k=" << ev.k << '\n';
    out_ << "witness=" << list(ev.witness) << '\n';
    out_ << "thick_union=" << to_string(ev.thick_union) << '\n';
    out_ << "algebra_atoms=" << ev.algebra->atoms().size() << '\n';
    auto accepted = [](const StagedFilter& f) {
      return std::count_if(f.stages().begin(), f.stages().end(), [](const auto& s) { return s.accepted; });
    };
    out_ << "tif_stages=" << ev.tif->stages().size() << " tif_accepted=" << accepted(*ev.tif)
         << " tif_core=" << to_string(ev.tif->core()) << " T_in_M=" << flag(ev.t_in_m) << '\n';
    out_ << "uf_stages=" << ev.ultrafilter->stages().size()
         << " uf_accepted=" << accepted(*ev.ultrafilter)
         << " uf_core=" << to_string(ev.ultrafilter->core()) << " T_in_U=" << flag(ev.t_in_u) << '\n';
    out_ << "chosen_shift=" << ev.chosen_shift << '\n';
    const Progression& p = ev.claim.progression;
    out_ << "progression start=" << p.start << " gap=" << p.gap << " terms=" << list(p.terms())
         << " rounds=" << count_rounds(ev.claim.trace) << " calls=" << ev.claim.hypothesis_calls << '\n';
    if (opt_.trace) print_trace(ev.claim.trace, 0);
    out_ << "terms_verified=" << flag(ev.terms_verified) << '\n';
    out_ << "meet=" << to_string(ev.meet) << " meet_in_U=" << flag(ev.meet_in_u)
         << " meet_contained=" << flag(ev.meet_contained) << '\n';
    out_ << "apk=" << to_string(ev.apk) << '\n';
    out_ << "oracle_horizon=" << ev.oracle_horizon << " oracle_agrees=" << flag(ev.oracle_agrees)
         << " oracle_pws=" << flag(ev.oracle_pws) << '\n';
    out_ << "APK_PWS=" << flag(ev.apk_pws && ev.verdict()) << '\n';
  }

  TheoremOptions theorem_options() const {
    TheoremOptions t;
    t.stages = opt_.stages;
    t.oracle_horizon = opt_.horizon;
    return t;
  }

  int pipeline() {
    const EpSet a = eval_expr(opt_.exprs.at(0));
    note("theorem pipeline for " + to_string(a));
    const TheoremEvidence ev = theorem_main(a, opt_.k, theorem_options());
    print_evidence(ev);
    return ev.verdict() ? ok : verification_failed;
  }

  int color() {
    std::vector<EpSet> pieces;
    for (const auto& e : opt_.exprs) pieces.push_back(eval_expr(e));
    note("coloring with " + std::to_string(pieces.size()) + " pieces");
    const ColoringEvidence ev = corollary_coloring(pieces, opt_.k, theorem_options());
    out_ << "piece=" << ev.ramsey.index + 1 << " good_k=" << ev.ramsey.report.k << " intervals=";
    std::vector<std::string> ivs;
    for (const auto& iv : ev.ramsey.report.intervals) {
      ivs.push_back(std::to_string(iv.start) + ".." + std::to_string(iv.last()));
    }
    out_ << list(ivs) << '\n';
    print_evidence(ev.theorem);
    return ev.theorem.verdict() ? ok : verification_failed;
  }

  std::vector<EpSet> seeds() const {
    std::vector<EpSet> out;
    for (const auto& e : opt_.exprs) out.push_back(eval_expr(e));
    return out;
  }

  int stages() {
    FilterKind kind;
    if (opt_.kind == "uf") {
      kind = FilterKind::ultrafilter;
    } else if (opt_.kind == "tif") {
      kind = FilterKind::maximal_tif;
    } else {
      throw PreconditionError("--kind must be uf or tif");
    }
    auto alg = std::make_shared<const SetAlgebra>(seeds());
    StagedFilter f(kind, alg, FipFamily{{eval_expr(opt_.base)}, {}});
    note(std::string(kind == FilterKind::ultrafilter ? "ultrafilter" : "maximal TIF") +
         " stages over " + std::to_string(alg->atoms().size()) + " atoms");
    f.run_literal_stages(opt_.count);
    if (opt_.closing) f.run_closing_sequence();
    bool certified = true;
    for (const auto& s : f.stages()) {
      out_ << "n=" << s.stage << " B=" << to_string(s.set) << " accept=" << flag(s.accepted)
           << " cert=" << describe(s.certificate);
      if (s.closing) out_ << " closing=true";
      out_ << '\n';
      if (!s.accepted) certified &= counterexample_is_empty(s.certificate);
    }
    out_ << "core=" << to_string(f.core()) << " certificates_verified=" << flag(certified) << '\n';
    return certified ? ok : verification_failed;
  }

  int algebra() {
    const SetAlgebra alg(seeds());
    note("algebra generated by " + std::to_string(alg.roots().size()) + " roots");
    for (Nat n = 1; n <= opt_.count; ++n) out_ << "n=" << n << " B=" << to_string(alg.element(n)) << '\n';
    out_ << "atoms=" << alg.atoms().size() << '\n';
    for (std::size_t i = 0; i < alg.atoms().size(); ++i) {
      out_ << "atom=" << i + 1 << " set=" << to_string(alg.atoms()[i]) << '\n';
    }
    return ok;
  }

  int quotient() {
    const CorrespondenceReport rep = check_correspondence(opt_.modulus);
    note("finite quotient model mod " + std::to_string(rep.modulus));
    out_ << "P=" << rep.modulus << '\n';
    for (std::size_t r = 0; r < rep.modulus; ++r) out_ << "sum r=" << r << " row=" << list(rep.sum_table[r]) << '\n';
    out_ << "sum_is_addition=" << flag(rep.sum_is_addition) << " associative=" << flag(rep.associative) << '\n';
    out_ << "filters=" << rep.filters << " tifs=" << rep.tifs << " left_ideals=" << rep.left_ideals
         << " minimal_left_ideals=" << rep.minimal_left_ideals << " K=" << list(rep.k_atoms) << '\n';
    out_ << "tif_gives_left_ideal=" << flag(rep.tif_gives_left_ideal)
         << " left_ideal_gives_tif=" << flag(rep.left_ideal_gives_tif) << '\n';
    out_ << "closure_round_trip=" << flag(rep.closure_round_trip) << " closure=identity\n";
    out_ << "filter_round_trip=" << flag(rep.filter_round_trip)
         << " maximal_iff_minimal=" << flag(rep.maximal_iff_minimal) << '\n';
    out_ << "k_is_everything=" << flag(rep.k_is_everything)
         << " atom_extends_iff_in_k=" << flag(rep.atom_extends_iff_in_k) << '\n';
    out_ << "CORRESPONDENCE=" << flag(rep.passed()) << '\n';
    return rep.passed() ? ok : verification_failed;
  }

  int oracle() {
    const std::string& src = opt_.exprs.at(0);
    std::optional<EpSet> set;
    if (src.rfind("win:", 0) != 0) set = eval_expr(src);
    const WindowSet w = set ? materialize(*set, opt_.horizon != 0 ? opt_.horizon
                                                                  : set->preperiod_len() + 4 * set->period_len())
                            : WindowSet::from_string(std::string_view(src).substr(4));
    note("window oracles on 1.." + std::to_string(w.horizon()));
    out_ << "horizon=" << w.horizon() << " window=" << to_string(w) << '\n';
    const auto gap = oracle_gap_bound(w);
    out_ << "gap=" << (gap ? std::to_string(*gap) : "none") << '\n';
    const auto ap = oracle_find_ap(w, opt_.k);
    out_ << "ap k=" << opt_.k << ' ';
    if (ap) {
      out_ << "start=" << ap->start << " gap=" << ap->gap << " terms=" << list(ap->terms()) << '\n';
    } else {
      out_ << "none\n";
    }
    if (set) out_ << "apk_window=" << to_string(oracle_ap_k(*set, opt_.k, w.horizon())) << '\n';
    return ok;
  }

 private:
  const Options& opt_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Piecewise syndetic sets, staged filters and van der Waerden progressions", "pws"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--porcelain", opt.porcelain, "Machine-readable key=value lines only");
  app.add_option("--horizon", opt.horizon, "Window horizon for oracles (0 = per-command default)");
  app.add_option("--stages", opt.stages, "Literal stages for filter constructions")->capture_default_str();
  app.add_option("--lcm-cap", opt.lcm_cap, "Largest aligned period allowed (0 = keep 65536)");
  app.add_flag("--trace", opt.trace, "Dump the progression claim's rounds");

  auto add = [&](const char* name, const char* desc, const char* what) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    sub->add_option("expr", opt.exprs, what)->required();
    return sub;
  };
  auto* classify = add("classify", "Thick / syndetic / piecewise syndetic verdicts", "Set expression");
  auto* apk = add("apk", "AP_k of a set with witness gaps", "Set expression");
  apk->add_option("-k", opt.k, "Progression terms beyond the first")->capture_default_str();
  auto* pipeline = add("pipeline", "Run the theorem pipeline and print its evidence", "Set expression");
  pipeline->add_option("-k", opt.k, "Progression terms beyond the first")->capture_default_str();
  auto* stages = add("stages", "Staged ultrafilter / maximal TIF construction", "Seed expressions");
  stages->add_option("--kind", opt.kind, "uf or tif")->capture_default_str();
  stages->add_option("--n", opt.count, "Literal stages to print")->capture_default_str();
  stages->add_option("--base", opt.base, "Shift root of the base family")->capture_default_str();
  stages->add_flag("--closing", opt.closing, "Also run the closing sequence");
  auto* algebra = add("algebra", "Enumerate the generated algebra", "Seed expressions");
  algebra->add_option("--n", opt.count, "Elements to print")->capture_default_str();
  auto* color = add("color", "Pick a piece of a coloring and run the pipeline on it", "Piece expressions");
  color->add_option("-k", opt.k, "Progression terms beyond the first")->capture_default_str();
  auto* quotient = app.add_subcommand("quotient", "Finite cyclic quotient model");
  quotient->fallthrough();
  quotient->add_option("-P", opt.modulus, "Modulus (1..8)")->capture_default_str();
  auto* oracle = add("oracle", "Brute-force window oracles (expr or win:<bits>)", "Set expression or win:<bits>");
  oracle->add_option("-k", opt.k, "Progression terms beyond the first")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }

  const std::size_t old_cap = lcm_cap();
  struct Restore {
    std::size_t cap;
    ~Restore() { set_lcm_cap(cap); }
  } restore{old_cap};
  if (opt.lcm_cap != 0) set_lcm_cap(opt.lcm_cap);

  Runner r(opt, out);
  try {
    if (*classify) return r.classify();
    if (*apk) return r.apk();
    if (*pipeline) return r.pipeline();
    if (*stages) return r.stages();
    if (*algebra) return r.algebra();
    if (*color) return r.color();
    if (*quotient) return r.quotient();
    if (*oracle) return r.oracle();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const Error& e) {
    err << "verification failure: " << e.what() << '\n';
    return verification_failed;
  }
  return usage_error;
}

}  // namespace pws::cli
