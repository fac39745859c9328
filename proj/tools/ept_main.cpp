#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "ept/context.hpp"
#include "ept/errors.hpp"
#include "ept/json_io.hpp"
#include "ept/markov.hpp"
#include "ept/measure.hpp"
#include "ept/oracle.hpp"
#include "ept/partition.hpp"
#include "ept/randvar.hpp"
#include "ept/selftest.hpp"
#include "ept/stset.hpp"
#include "ept/sym_int.hpp"
#include "ept/tolerances.hpp"

namespace {

using nlohmann::ordered_json;

/// One number formatter for tables and JSON, so the two outputs carry
/// byte-identical values.
std::string fmt(double v) { return nlohmann::json(v).dump(); }

double round_hundredths(double v) { return std::round(v * 100.0) / 100.0; }

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

ept::QuadraticState load_state(const std::string& path, bool normalize) {
  ept::QuadraticState state = ept::load_space_file(path);
  if (!state.validation().ok()) {
    const auto& v = state.validation();
    throw ept::ValidationError(path + ": state is not a member of the state space (" +
                               std::string(v.psd ? "" : "not strongly positive; ") +
                               std::string(v.positive_trace ? "" : "trace not positive; ") +
                               "lambda_min " + fmt(v.lambda_min) + ", trace " + fmt(v.trace) + ")");
  }
  if (normalize) state = state.scaled(1.0 / state.trace());
  return state;
}

int cmd_validate(const std::string& path, bool as_json) {
  ept::QuadraticState state = ept::load_space_file(path);
  const ept::StateValidation& v = state.validation();
  if (as_json) {
    ordered_json doc;
    doc["verdict"] = v.ok() ? "pass" : "fail";
    doc["psd"] = v.psd;
    doc["positive_trace"] = v.positive_trace;
    doc["gram_cross_check"] = v.gram_cross_check;
    doc["lambda_min"] = v.lambda_min;
    doc["lambda_max"] = v.lambda_max;
    doc["trace"] = v.trace;
    emit(doc);
  } else {
    std::cout << "verdict: " << (v.ok() ? "PASS" : "FAIL") << "\n";
    std::cout << "psd: " << (v.psd ? "yes" : "no") << "\n";
    std::cout << "positive_trace: " << (v.positive_trace ? "yes" : "no") << "\n";
    std::cout << "gram_cross_check: " << (v.gram_cross_check ? "yes" : "no") << "\n";
    std::cout << "lambda_min: " << fmt(v.lambda_min) << "\n";
    std::cout << "lambda_max: " << fmt(v.lambda_max) << "\n";
    std::cout << "trace: " << fmt(v.trace) << "\n";
  }
  return v.ok() ? 0 : 2;
}

int cmd_measure(const std::string& path, const std::string& event_literal,
                const std::string& context_literal, bool normalize, bool as_json) {
  const ept::QuadraticState state = load_state(path, normalize);
  const ept::Partition event = ept::parse_partition(state.space(), event_literal);
  const double value = ept::measure_of(state, event);

  bool has_context = !context_literal.empty();
  double freq = 0.0;
  std::string context_text;
  if (has_context) {
    const ept::Universe universe(ept::parse_partition(state.space(), context_literal));
    const ept::Context context(universe);
    if (!context.contains(event)) {
      throw ept::DomainError("event \"" + ept::format_partition(event) +
                             "\" is not a member of the context of \"" +
                             ept::format_partition(universe.partition()) + "\"");
    }
    freq = ept::frequency(state, context, event);
    context_text = ept::format_partition(universe.partition());
  }

  if (as_json) {
    ordered_json doc;
    doc["event"] = ept::format_partition(event);
    doc["measure"] = value;
    if (has_context) {
      doc["context"] = context_text;
      doc["frequency"] = freq;
    }
    emit(doc);
  } else {
    std::cout << "event: " << ept::format_partition(event) << "\n";
    std::cout << "measure: " << fmt(value) << "\n";
    if (has_context) {
      std::cout << "context: " << context_text << "\n";
      std::cout << "frequency: " << fmt(freq) << "\n";
    }
  }
  return 0;
}

int cmd_contexts(int n, bool list, bool as_json) {
  const ept::SampleSpace space = ept::SampleSpace::with_size(n);
  if (!list) {
    const std::uint64_t count = ept::count_universes(space);
    if (as_json) {
      ordered_json doc;
      doc["n"] = n;
      doc["count"] = count;
      emit(doc);
    } else {
      std::cout << count << "\n";
    }
    return 0;
  }
  const std::vector<ept::Universe> universes = ept::enumerate_universes(space);
  if (as_json) {
    ordered_json doc;
    doc["n"] = n;
    doc["count"] = universes.size();
    ordered_json items = ordered_json::array();
    for (const ept::Universe& u : universes) items.push_back(ept::format_partition(u.partition()));
    doc["universes"] = std::move(items);
    emit(doc);
  } else {
    for (const ept::Universe& u : universes) {
      std::cout << ept::format_partition(u.partition()) << "\n";
    }
  }
  return 0;
}

int cmd_expect(const std::string& path, const std::string& rv_path, bool normalize, bool as_json) {
  const ept::QuadraticState state = load_state(path, normalize);
  const ept::ContextRandomVariable rv = ept::load_rv_file(rv_path, state.space());
  const ept::Context& context = rv.context();
  const std::vector<ept::Partition> atoms = context.elementary_events();

  std::vector<double> frequencies(atoms.size(), 0.0);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    frequencies[i] = ept::frequency(state, context, atoms[i]);
  }
  const double mean = ept::expectation(state, rv);

  if (as_json) {
    ordered_json doc;
    doc["universe"] = ept::format_partition(context.universe().partition());
    ordered_json blocks = ordered_json::array();
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      ordered_json row;
      row["block"] = ept::format_partition(atoms[i]);
      row["value"] = rv.block_value(static_cast<int>(i));
      row["frequency"] = frequencies[i];
      blocks.push_back(std::move(row));
    }
    doc["blocks"] = std::move(blocks);
    doc["expectation"] = mean;
    emit(doc);
  } else {
    std::cout << "universe: " << ept::format_partition(context.universe().partition()) << "\n";
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      std::cout << "block " << ept::format_partition(atoms[i]) << ": value "
                << fmt(rv.block_value(static_cast<int>(i))) << ", frequency "
                << fmt(frequencies[i]) << "\n";
    }
    std::cout << "expectation: " << fmt(mean) << "\n";
  }
  return 0;
}

int cmd_twoslit(int positions, const std::string& state_choice, bool as_json) {
  const ept::TwoSlit slit = ept::two_slit_space(positions);
  std::string state_name = state_choice;
  const ept::QuadraticState state = [&]() -> ept::QuadraticState {
    if (state_choice == "interference") return ept::two_slit_interference_state(slit);
    if (state_choice == "classical") return ept::two_slit_classical_state(slit);
    state_name = "file:" + state_choice;
    ept::QuadraticState loaded = ept::load_space_file(state_choice);
    if (!loaded.space().same_as(slit.space)) {
      throw ept::DomainError(state_choice + ": space labels must match the two-slit space for " +
                             std::to_string(positions) + " positions (e11, e21, ..., e" +
                             std::to_string(positions) + "2)");
    }
    return loaded;
  }();
  if (!state.validation().ok()) {
    throw ept::ValidationError("two-slit state is not a member of the state space (lambda_min " +
                               fmt(state.validation().lambda_min) + ", trace " +
                               fmt(state.validation().trace) + ")");
  }

  const ept::Context singles(slit.which_way);
  const ept::Context dyads(slit.dyadic);

  struct Row {
    int position;
    double separated, merged, dyadic_frequency, singles_frequency, difference;
  };
  std::vector<Row> rows;
  for (int x = 0; x < positions; ++x) {
    Row row;
    row.position = x + 1;
    const ept::Partition merged(slit.space, {{2 * x, 2 * x + 1}});
    const ept::Partition separated(slit.space, {{2 * x}, {2 * x + 1}});
    const ept::Partition first(slit.space, {{2 * x}});
    const ept::Partition second(slit.space, {{2 * x + 1}});
    row.separated = ept::measure_of(state, separated);
    row.merged = ept::measure_of(state, merged);
    row.dyadic_frequency = ept::frequency(state, dyads, merged);
    row.singles_frequency =
        ept::frequency(state, singles, first) + ept::frequency(state, singles, second);
    row.difference = row.dyadic_frequency - row.singles_frequency;
    rows.push_back(row);
  }

  if (as_json) {
    ordered_json doc;
    doc["positions"] = positions;
    doc["state"] = state_name;
    ordered_json items = ordered_json::array();
    for (const Row& row : rows) {
      ordered_json r;
      r["position"] = row.position;
      r["separated"] = row.separated;
      r["merged"] = row.merged;
      r["dyadic_frequency"] = row.dyadic_frequency;
      r["singles_frequency"] = row.singles_frequency;
      r["difference"] = row.difference;
      items.push_back(std::move(r));
    }
    doc["rows"] = std::move(items);
    emit(doc);
  } else {
    std::cout << "state: " << state_name << "\n";
    std::cout << "position  P(separated)  P(merged)  F_dyadic  F_singles  difference\n";
    for (const Row& row : rows) {
      std::cout << row.position << "  " << fmt(row.separated) << "  " << fmt(row.merged) << "  "
                << fmt(row.dyadic_frequency) << "  " << fmt(row.singles_frequency) << "  "
                << fmt(row.difference) << "\n";
    }
  }
  return 0;
}

int cmd_markov_classify(const std::string& path, bool as_json) {
  const ept::ProbabilityTransformation phi = ept::load_matrix_file(path);
  const ept::TransformationClass result = ept::classify_transformation(phi);
  if (as_json) {
    ordered_json doc;
    doc["n"] = phi.size();
    doc["deterministic"] = result.deterministic;
    doc["permutation"] = result.permutation;
    doc["invertible"] = result.invertible;
    doc["inverse_route_invertible"] = result.inverse_route_invertible;
    doc["inverse_route_agrees"] = result.inverse_route_agrees;
    if (result.deterministic) {
      ordered_json targets = ordered_json::array();
      for (int t : result.column_targets) targets.push_back(t + 1);
      doc["column_targets"] = std::move(targets);
    }
    emit(doc);
  } else {
    const auto yesno = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "n: " << phi.size() << "\n";
    std::cout << "deterministic: " << yesno(result.deterministic) << "\n";
    std::cout << "permutation: " << yesno(result.permutation) << "\n";
    std::cout << "invertible: " << yesno(result.invertible) << "\n";
    std::cout << "inverse_route_invertible: " << yesno(result.inverse_route_invertible) << "\n";
    std::cout << "inverse_route_agrees: " << yesno(result.inverse_route_agrees) << "\n";
    if (result.deterministic) {
      std::cout << "column_targets:";
      for (int t : result.column_targets) std::cout << " " << t + 1;
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_markov_no_go(int n, bool as_json) {
  const ept::NoGoReport report = ept::cpt_no_go_certificate(n);
  if (as_json) {
    ordered_json doc;
    doc["n"] = report.n;
    doc["deterministic_maps"] = report.deterministic_maps;
    doc["invertible"] = report.invertible_count;
    doc["expected_invertible"] = report.expected_invertible;
    doc["all_invertible_are_permutations"] = report.all_invertible_are_permutations;
    doc["classifier_agreement"] = report.classifier_agreement;
    doc["verdict"] = report.ok() ? "pass" : "fail";
    emit(doc);
  } else {
    std::cout << report.deterministic_maps << " deterministic maps, " << report.invertible_count
              << " invertible, "
              << (report.all_invertible_are_permutations ? "all permutations"
                                                         : "NOT all permutations")
              << "\n";
    if (!report.ok()) {
      std::cout << "verdict: FAIL (expected " << report.expected_invertible << " invertible"
                << (report.classifier_agreement ? "" : "; classifier disagreed") << ")\n";
    }
  }
  return report.ok() ? 0 : 2;
}

int cmd_identity_check(int n, bool as_json) {
  if (n < 1 || n > 10) {
    throw ept::CapExceededError("identity-check enumerates 2^n subsets; n must be 1..10, got " +
                                std::to_string(n));
  }
  const ept::SampleSpace space = ept::SampleSpace::with_size(n);
  std::uint64_t families = 0;
  bool all_zero = true;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::vector<int>> singletons;
    for (int x = 0; x < n; ++x) {
      if (mask & (1u << x)) singletons.push_back({x});
    }
    ++families;
    if (!ept::plus_identity_residual(space, singletons).is_zero()) all_zero = false;
    if (ept::oracle::union_square_cells(n, singletons) !=
        ept::oracle::pairwise_rhs_cells(n, singletons)) {
      all_zero = false;
    }
  }
  if (as_json) {
    ordered_json doc;
    doc["n"] = n;
    doc["families"] = families;
    doc["all_zero"] = all_zero;
    doc["verdict"] = all_zero ? "pass" : "fail";
    emit(doc);
  } else {
    std::cout << "checked " << families << " subset families at n=" << n << ": "
              << (all_zero ? "all residuals exactly 0" : "NON-ZERO RESIDUAL FOUND") << "\n";
  }
  return all_zero ? 0 : 2;
}

int cmd_selftest(const std::vector<std::string>& picked, std::uint64_t seed, bool as_json) {
  ept::selftest::Options options;
  options.seed = seed;
  std::vector<ept::selftest::SuiteResult> results;
  if (picked.empty()) {
    results = ept::selftest::run_all(options);
  } else {
    for (const std::string& name : picked) {
      results.push_back(ept::selftest::run_suite(name, options));
    }
  }
  bool all_pass = true;
  for (const auto& r : results) all_pass = all_pass && r.pass;

  if (as_json) {
    ordered_json doc;
    doc["seed"] = seed;
    ordered_json suites = ordered_json::array();
    for (const auto& r : results) {
      ordered_json row;
      row["name"] = r.name;
      row["pass"] = r.pass;
      row["detail"] = r.detail;
      row["seconds"] = round_hundredths(r.seconds);
      suites.push_back(std::move(row));
    }
    doc["suites"] = std::move(suites);
    doc["all_pass"] = all_pass;
    emit(doc);
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " — " << r.detail << " ("
                << fmt(round_hundredths(r.seconds)) << " s)\n";
    }
    std::cout << (all_pass ? "all suites passed" : "SOME SUITES FAILED") << "\n";
  }
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extended probability over finite sample spaces: partitions as events, "
               "quadratic measures, contexts, and the classical Markov layer"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ept 1.0.0");

  int exit_code = 0;

  // validate
  std::string validate_path;
  bool validate_json = false;
  auto* validate = app.add_subcommand("validate", "check a space file for strong positivity");
  validate->add_option("space", validate_path, "space file (JSON)")->required();
  validate->add_flag("--json", validate_json, "emit JSON");
  validate->callback([&] { exit_code = cmd_validate(validate_path, validate_json); });

  // measure
  std::string measure_path, measure_event, measure_context;
  bool measure_json = false, measure_normalize = false;
  auto* measure = app.add_subcommand("measure", "evaluate an event literal against a state");
  measure->add_option("space", measure_path, "space file (JSON)")->required();
  measure->add_option("--event", measure_event, "partition literal, e.g. \"e1,e2 | e3\"")
      ->required();
  measure->add_option("--context", measure_context,
                      "universe literal; also report the relative frequency");
  measure->add_flag("--normalize", measure_normalize, "rescale so the classical universe has mass 1");
  measure->add_flag("--json", measure_json, "emit JSON");
  measure->callback([&] {
    exit_code =
        cmd_measure(measure_path, measure_event, measure_context, measure_normalize, measure_json);
  });

  // contexts
  int contexts_n = 0;
  bool contexts_count = false, contexts_list = false, contexts_json = false;
  auto* contexts = app.add_subcommand("contexts", "count or list the universes of an n-point space");
  contexts->add_option("--n", contexts_n, "number of outcomes")->required();
  contexts->add_flag("--count", contexts_count, "print the number of universes (default)");
  contexts->add_flag("--list", contexts_list, "print one universe literal per line");
  contexts->add_flag("--json", contexts_json, "emit JSON");
  contexts->callback([&] { exit_code = cmd_contexts(contexts_n, contexts_list, contexts_json); });

  // expect
  std::string expect_path, expect_rv;
  bool expect_json = false, expect_normalize = false;
  auto* expect = app.add_subcommand("expect", "expectation of a context random variable");
  expect->add_option("space", expect_path, "space file (JSON)")->required();
  expect->add_option("--rv", expect_rv, "random-variable file (JSON)")->required();
  expect->add_flag("--normalize", expect_normalize, "rescale so the classical universe has mass 1");
  expect->add_flag("--json", expect_json, "emit JSON");
  expect->callback([&] { exit_code = cmd_expect(expect_path, expect_rv, expect_normalize, expect_json); });

  // twoslit
  int twoslit_positions = 0;
  std::string twoslit_state = "interference";
  bool twoslit_json = false;
  auto* twoslit = app.add_subcommand("twoslit", "per-position table for the two-slit arrangement");
  twoslit->add_option("--positions", twoslit_positions, "number of detector positions")->required();
  twoslit->add_option("--state", twoslit_state,
                      "\"interference\", \"classical\", or a space-file path");
  twoslit->add_flag("--json", twoslit_json, "emit JSON");
  twoslit->callback(
      [&] { exit_code = cmd_twoslit(twoslit_positions, twoslit_state, twoslit_json); });

  // markov
  auto* markov = app.add_subcommand("markov", "classical probability-transformation layer");
  markov->require_subcommand(1);
  std::string markov_file;
  bool markov_classify_json = false;
  auto* classify = markov->add_subcommand("classify", "classify a transformation matrix file");
  classify->add_option("file", markov_file, "matrix file (JSON)")->required();
  classify->add_flag("--json", markov_classify_json, "emit JSON");
  classify->callback([&] { exit_code = cmd_markov_classify(markov_file, markov_classify_json); });

  int nogo_n = 0;
  bool nogo_json = false;
  auto* nogo = markov->add_subcommand("no-go", "enumerate deterministic maps and certify the no-go");
  nogo->add_option("--n", nogo_n, "number of classical states (2..8)")->required();
  nogo->add_flag("--json", nogo_json, "emit JSON");
  nogo->callback([&] { exit_code = cmd_markov_no_go(nogo_n, nogo_json); });

  // identity-check
  int identity_n = 0;
  bool identity_json = false;
  auto* identity = app.add_subcommand("identity-check",
                                      "exhaustive disjoint-union indicator identity at size n");
  identity->add_option("--n", identity_n, "number of outcomes (1..10)")->required();
  identity->add_flag("--json", identity_json, "emit JSON");
  identity->callback([&] { exit_code = cmd_identity_check(identity_n, identity_json); });

  // selftest
  std::vector<std::string> selftest_suites;
  std::uint64_t selftest_seed = ept::kDefaultSeed;
  bool selftest_json = false;
  auto* selftest = app.add_subcommand("selftest", "run the certification suites");
  selftest->add_option("--suite", selftest_suites, "run only the named suites (repeatable)");
  selftest->add_option("--seed", selftest_seed, "seed for the randomized portions");
  selftest->add_flag("--json", selftest_json, "emit JSON");
  selftest->callback(
      [&] { exit_code = cmd_selftest(selftest_suites, selftest_seed, selftest_json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    // Help and version exit cleanly; anything else is an input error.
    return code == 0 ? 0 : 3;
  } catch (const ept::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ept::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
