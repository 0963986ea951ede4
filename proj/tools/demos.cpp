#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "commands.hpp"

namespace credalkit::cli {

namespace {

Rational rat(const char* text) { return *parse_rational(text); }

Prior prior4(const char* a, const char* b, const char* c, const char* d) {
  return Prior({rat(a), rat(b), rat(c), rat(d)});
}

Prior prior3(const char* a, const char* b, const char* c) {
  return Prior({rat(a), rat(b), rat(c)});
}

// Every demo line is checked against the embedded expected text; a
// mismatch is reported and turns into exit code 4.
struct Oracle {
  std::ostream& out;
  bool ok = true;

  void line(const std::string& label, const std::string& actual,
            const std::string& expected) {
    out << label << "=" << actual << "\n";
    if (actual != expected) {
      out << "oracle_mismatch " << label << " expected=" << expected << "\n";
      ok = false;
    }
  }

  void boolean(const std::string& label, bool actual, bool expected) {
    line(label, actual ? "true" : "false", expected ? "true" : "false");
  }

  void rational(const std::string& label, const Rational& actual,
                const char* expected) {
    line(label, format_rational(actual), expected);
  }

  void vertices(const std::string& label, const CredalSet& actual,
                const std::string& expected) {
    line(label, format_vertices(actual), expected);
  }

  void order(const std::string& label, PreferenceOrder actual,
             const std::string& expected) {
    const char* text = actual == PreferenceOrder::FirstStrict ? "f_strict"
                       : actual == PreferenceOrder::SecondStrict
                           ? "g_strict"
                           : "indifferent";
    line(label, text, expected);
  }
};

StateSpace urn_space() { return StateSpace({"r", "b", "y"}); }

CredalSet urn_set() {
  return CredalSet(urn_space(), {prior3("9/20", "9/20", "2/20"),
                                 prior3("6/10", "2/10", "2/10"),
                                 prior3("1/10", "3/10", "6/10")});
}

int demo_kate(std::ostream& out) {
  Oracle oracle{out};
  const CredalSet set = urn_set();
  const Event rb = urn_space().event_of(std::vector<std::string>{"r", "b"});

  oracle.vertices("set", set,
                  "(1/10, 3/10, 3/5);(9/20, 9/20, 1/10);(3/5, 1/5, 1/5)");
  oracle.rational("max_likelihood", max_probability(set, rb), "9/10");

  const CredalSet fb = update(set, rb, FullBayes{});
  oracle.vertices("fb", fb, "(1/4, 3/4, 0);(3/4, 1/4, 0)");
  oracle.vertices("ml", update(set, rb, MaxLikelihood{}), "(1/2, 1/2, 0)");
  oracle.vertices("pb:1/2", update(set, rb, ConstantPartialBayes{rat("1/2")}),
                  "(3/10, 7/10, 0);(3/4, 1/4, 0)");
  oracle.vertices("pb:13/18",
                  update(set, rb, ConstantPartialBayes{rat("13/18")}),
                  "(11/26, 15/26, 0);(3/4, 1/4, 0)");

  const auto bounds = event_prob_bounds(set, rb);
  oracle.rational("collapse_bound", bounds.min / bounds.max, "4/9");
  oracle.boolean("pb_at_bound_equals_fb",
                 update(set, rb, ConstantPartialBayes{rat("4/9")}) == fb, true);
  oracle.boolean("pb_above_bound_differs",
                 update(set, rb, ConstantPartialBayes{rat("5/9")}) != fb &&
                     update(set, rb, ConstantPartialBayes{rat("8/9")}) != fb,
                 true);
  return oracle.ok ? kExitSuccess : kExitOracleMismatch;
}

int demo_reversal2(std::ostream& out) {
  Oracle oracle{out};
  const CredalSet set = urn_set();
  const Event rb = urn_space().event_of(std::vector<std::string>{"r", "b"});
  const Act f({rat("0"), rat("10"), rat("0")});
  const Act g({rat("10"), rat("0"), rat("0")});

  oracle.rational("ex_ante_f", meu_value(set, f), "2");
  oracle.rational("ex_ante_g", meu_value(set, g), "1");

  const PreferenceContext ex_ante{set, FullBayes{}, std::nullopt};
  oracle.order("ex_ante", prefer(ex_ante, f, g), "f_strict");
  oracle.order("fb", prefer({set, FullBayes{}, rb}, f, g), "indifferent");
  oracle.order("ml", prefer({set, MaxLikelihood{}, rb}, f, g), "indifferent");

  const PreferenceContext half{set, ConstantPartialBayes{rat("1/2")}, rb};
  oracle.order("pb:1/2", prefer(half, f, g), "g_strict");

  const Act x = Act::constant(3, rat("5/2"));
  const Act plan_gx = composite_act(g, rb, x);
  oracle.rational("gAx_value", meu_value(set, plan_gx), "5/2");
  const CredalSet posterior = update(set, rb, ConstantPartialBayes{rat("1/2")});
  oracle.rational("g_after_event", meu_value(posterior, g), "3");
  oracle.boolean("wpc",
                 check_weak_planning_consistency(half, rb, g, rat("5/2")),
                 true);
  oracle.boolean("pires", check_pires_consistency(half, rb, g, rat("5/2")),
                 false);

  const Act z = Act::constant(3, rat("3"));
  const Act plan_gz = composite_act(g, rb, z);
  oracle.rational("gAz_value", meu_value(set, plan_gz), "14/5");
  oracle.order("g_vs_z_after", prefer(half, g, z), "indifferent");

  const auto report = check_dynamic_consistency(half, rb, f, g);
  oracle.boolean("dc_forward", report.forward, false);
  oracle.boolean("dc_backward", report.backward, true);
  const auto commitment = check_dynamic_consistency(half, rb, g, z);
  oracle.boolean("dc_backward_on_sure_pair", commitment.backward, false);
  return oracle.ok ? kExitSuccess : kExitOracleMismatch;
}

int demo_contamination(std::ostream& out) {
  Oracle oracle{out};
  const CredalSet ambient = urn_set();
  const Event rb = urn_space().event_of(std::vector<std::string>{"r", "b"});
  const Prior reference = prior3("1/3", "1/3", "1/3");

  oracle.line("reference", format_point(reference.coordinates()),
              "(1/3, 1/3, 1/3)");
  const Rational epsilon = rat("1/2");
  const CredalSet contaminated =
      epsilon_contamination(reference, ambient, epsilon);
  oracle.vertices(
      "contaminated", contaminated,
      "(13/60, 19/60, 7/15);(47/120, 47/120, 13/60);(7/15, 4/15, 4/15)");
  oracle.rational("contaminated_max", max_probability(contaminated, rb),
                  "47/60");

  for (const char* rho_text : {"1/2", "9/10"}) {
    const Rational rho = rat(rho_text);
    const bool closed = reference_retained(reference, ambient, epsilon, rho, rb);
    const Halfspace selection{rb.indicator(),
                              rho * max_probability(contaminated, rb)};
    const bool direct = hull_membership(
        reference.coordinates(),
        clip_halfspace(contaminated.polytope(), selection));
    oracle.boolean(std::string("closed_form_rho_") + rho_text, closed,
                   rho_text == std::string("1/2"));
    oracle.boolean(std::string("clip_membership_rho_") + rho_text, direct,
                   rho_text == std::string("1/2"));
    oracle.boolean(std::string("agree_rho_") + rho_text, closed == direct,
                   true);
  }

  oracle.boolean("retained_at_rho_0",
                 reference_retained(reference, ambient, epsilon, rat("0"), rb),
                 true);
  oracle.boolean(
      "retained_eps_1_rho_20/27",
      reference_retained(reference, ambient, rat("1"), rat("20/27"), rb), true);
  oracle.boolean(
      "epsilon_0_collapses",
      epsilon_contamination(reference, ambient, rat("0")) ==
          CredalSet(urn_space(), {reference}),
      true);
  oracle.boolean("epsilon_1_is_ambient",
                 epsilon_contamination(reference, ambient, rat("1")) == ambient,
                 true);
  return oracle.ok ? kExitSuccess : kExitOracleMismatch;
}

int demo_rml(std::ostream& out) {
  Oracle oracle{out};
  const CredalSet set = urn_set();
  const Event rb = urn_space().event_of(std::vector<std::string>{"r", "b"});
  const Rational contraction = rat("1/2");

  const CredalSet contracted = rml_contracted_set(set, rb, contraction);
  oracle.vertices(
      "contracted", contracted,
      "(11/40, 3/8, 7/20);(9/20, 9/20, 1/10);(21/40, 13/40, 3/20)");

  const Prior midpoint = prior3("11/40", "15/40", "14/40");
  const Prior excluded = prior3("6/10", "2/10", "2/10");
  oracle.rational("midpoint_likelihood", midpoint.probability(rb), "13/20");
  oracle.rational("excluded_likelihood", excluded.probability(rb), "4/5");
  oracle.boolean("midpoint_retained", contracted.contains(midpoint), true);
  oracle.boolean("excluded_retained", contracted.contains(excluded), false);
  oracle.boolean("monotone_selection_violated",
                 excluded.probability(rb) > midpoint.probability(rb) &&
                     contracted.contains(midpoint) &&
                     !contracted.contains(excluded),
                 true);
  oracle.vertices("posterior",
                  update(set, rb, RelativeMaxLikelihood{contraction}),
                  "(11/26, 15/26, 0);(21/34, 13/34, 0)");
  return oracle.ok ? kExitSuccess : kExitOracleMismatch;
}

int demo_ipi(std::ostream& out) {
  Oracle oracle{out};
  const StateSpace space({"s1", "s2", "s3", "s4"});
  const CredalSet set(space, {prior4("1/4", "1/4", "1/4", "1/4"),
                              prior4("1/4", "1/8", "1/2", "1/8")});
  const Event outer = space.event_of(std::vector<std::string>{"s1", "s2", "s3"});
  const Event inner = space.event_of(std::vector<std::string>{"s1", "s2"});

  oracle.vertices("set", set, "(1/4, 1/8, 1/2, 1/8);(1/4, 1/4, 1/4, 1/4)");
  oracle.vertices("posterior_outer", update(set, outer, MaxLikelihood{}),
                  "(2/7, 1/7, 4/7, 0)");
  oracle.vertices("posterior_inner", update(set, inner, MaxLikelihood{}),
                  "(1/2, 1/2, 0, 0)");

  const auto report =
      check_ipi(set, outer, inner, ThresholdPolicy::constant(rat("1")));
  oracle.vertices("sequential", report.sequential, "(2/3, 1/3, 0, 0)");
  oracle.boolean("ipi_holds", report.holds, false);
  oracle.line("witness",
              report.witness ? format_point(report.witness->coordinates())
                             : "none",
              "(1/2, 1/2, 0, 0)");

  // the same primacy effect across the revealing threshold range
  const InformationPath path_78(
      {{outer, rat("7/8")}, {inner, rat("1")}});
  oracle.vertices("sequential_rho_7/8", sequential_update(set, path_78),
                  "(16/31, 15/31, 0, 0)");
  const InformationPath path_1516(
      {{outer, rat("15/16")}, {inner, rat("1")}});
  oracle.vertices("sequential_rho_15/16", sequential_update(set, path_1516),
                  "(32/55, 23/55, 0, 0)");
  ThresholdPolicy below_bound;
  below_bound.set(outer, rat("6/7"));
  below_bound.set(inner, rat("1"));
  oracle.boolean("ipi_holds_below_bound",
                 check_ipi(set, outer, inner, below_bound).holds, true);
  return oracle.ok ? kExitSuccess : kExitOracleMismatch;
}

}  // namespace

std::vector<std::string> demo_names() {
  return {"kate", "reversal2", "contamination", "rml", "ipi"};
}

int run_demo(const std::string& name, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, int (*)(std::ostream&)> demos = {
      {"kate", demo_kate},
      {"reversal2", demo_reversal2},
      {"contamination", demo_contamination},
      {"rml", demo_rml},
      {"ipi", demo_ipi},
  };
  const auto found = demos.find(name);
  if (found == demos.end()) {
    err << "error: unknown demo '" << name << "' (kate, reversal2, "
        << "contamination, rml, ipi)\n";
    return kExitUsage;
  }
  return found->second(out);
}

}  // namespace credalkit::cli
