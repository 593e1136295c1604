#include "wps/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>
#include <sstream>

namespace wps {

namespace {

Json weights_json(const WeightVector& w) { return Json(w.values()); }

Json bigints_json(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

std::string group_name(const BigInt& order) {
  if (order == 0) return "Z";
  if (order == 1) return "0";
  return "Z/" + order.str();
}

Json groups_json(const GradedGroupList& groups) {
  Json out = Json::array();
  for (const auto& [degree, order] : groups.groups) {
    Json g;
    g["degree"] = degree;
    g["order"] = order.str();
    g["group"] = group_name(order);
    out.push_back(std::move(g));
  }
  return out;
}

Json header(const char* command) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

}  // namespace

Json normalize_report(const WeightVector& w) {
  const Normalization norm = normalize_traced(w);
  Json j = header("normalize");
  j["input"] = weights_json(w);
  j["normalized"] = weights_json(norm.result);
  Json moves = Json::array();
  for (const auto& m : norm.moves) {
    Json mj;
    if (m.kind == ReductionMove::Kind::scale) {
      mj["kind"] = "scale";
      mj["factor"] = m.factor;
    } else {
      mj["kind"] = "reduce";
      mj["prime"] = m.factor;
      mj["kept_index"] = m.kept_index;
    }
    moves.push_back(std::move(mj));
  }
  j["moves"] = std::move(moves);
  return j;
}

Json invariants_report(const WeightVector& w) {
  const WeightVector normal = normalize(w);
  const RingPresentation r = ring(normal);
  Json j = header("invariants");
  j["input"] = weights_json(w);
  j["input_is_normalized"] = is_normalized(w);
  j["normalized"] = weights_json(normal);

  Json table = Json::array();
  for (const auto& col : p_content_table(normal).columns) {
    Json c;
    c["prime"] = col.prime;
    c["unsorted"] = col.unsorted;
    c["sorted"] = col.sorted;
    table.push_back(std::move(c));
  }
  j["p_content"] = std::move(table);
  j["chi_star"] = weights_json(chi_star(normal));
  j["l_sequence"] = bigints_json(r.l().values());

  Json rows = Json::array();
  for (std::size_t i = 0; i <= r.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; i + k <= r.dim(); ++k) {
      row.push_back(r.structure_constant(i, k).str());
    }
    rows.push_back(std::move(row));
  }
  j["structure_constants"] = std::move(rows);
  j["additive_cohomology"] = groups_json(additive_cohomology(normal));
  j["homeo_canonical_form"] = weights_json(homeo_canonical_form(w));
  j["homotopy_canonical_form"] = weights_json(homotopy_canonical_form(w));
  return j;
}

Json compare_report(const WeightVector& a, const WeightVector& b) {
  Json j = header("compare");
  j["first"] = weights_json(a);
  j["second"] = weights_json(b);
  j["homeomorphic"] = homeomorphic(a, b);
  j["homotopy_equivalent"] = homotopy_equivalent(a, b);
  j["homeo_canonical_forms"] = Json::array(
      {weights_json(homeo_canonical_form(a)), weights_json(homeo_canonical_form(b))});
  j["homotopy_canonical_forms"] = Json::array(
      {weights_json(homotopy_canonical_form(a)),
       weights_json(homotopy_canonical_form(b))});
  return j;
}

Json lens_report(Weight k, const WeightVector& w) {
  Json j = header("lens");
  j["k"] = k;
  j["weights"] = weights_json(w);
  j["cohomology"] = groups_json(lens_cohomology(k, w));
  return j;
}

Json stratum_report(const WeightVector& w, const IndexSet& support) {
  const StratumChart chart = stratum_chart(w, support);
  Json j = header("stratum");
  j["weights"] = weights_json(w);
  j["support"] = chart.support;
  j["zero_set"] = chart.zero_set;
  j["torus_rank"] = chart.torus_rank;
  j["q"] = chart.q;
  j["cone_weights"] = chart.cone_weights;
  const bool normal = is_normalized(w);
  j["weights_normalized"] = normal;
  if (normal) {
    j["local_homology_order"] = local_homology_order(w, support);
  } else {
    j["local_homology_order"] = nullptr;
  }
  if (chart.cone_weights.size() >= 2) {
    j["lens_order"] = local_homology_order_via_lens(w, support).str();
  } else {
    j["lens_order"] = nullptr;
  }
  return j;
}

Json cells_report(const WeightVector& w) {
  const CellDecomposition cells = cell_decomposition(w);
  Json j = header("cells");
  j["weights"] = weights_json(w);
  j["cell_dimensions"] = cells.cell_dimensions;
  Json steps = Json::array();
  for (const auto& s : cells.filtration) {
    Json sj;
    sj["weights"] = weights_json(s.weights);
    sj["rescaled"] = weights_json(s.rescaled);
    steps.push_back(std::move(sj));
  }
  j["filtration"] = std::move(steps);
  return j;
}

Json census_report(const CensusReport& report, bool include_members) {
  Json j = header("census");
  j["dim"] = report.dim;
  j["max_weight"] = report.max_weight;
  j["vectors"] = report.vectors;
  j["homeo_class_count"] = report.homeo_class_count();
  j["homotopy_class_count"] = report.homotopy_class_count();
  j["refinement_violations"] = report.refinement_violations;
  Json classes = Json::array();
  for (const auto& rec : report.classes) {
    Json c;
    c["representative"] = weights_json(rec.representative);
    c["homeo_class"] = weights_json(rec.homeo_class);
    c["homotopy_class"] = weights_json(rec.homotopy_class);
    c["member_count"] = rec.members.size();
    if (include_members) {
      Json members = Json::array();
      for (const auto& m : rec.members) members.push_back(weights_json(m));
      c["members"] = std::move(members);
    }
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  Json homotopy = Json::array();
  for (const auto& [form, homeos] : report.homotopy_classes) {
    Json h;
    h["homotopy_class"] = weights_json(form);
    Json list = Json::array();
    for (const auto& x : homeos) list.push_back(weights_json(x));
    h["homeo_classes"] = std::move(list);
    homotopy.push_back(std::move(h));
  }
  j["homotopy_classes"] = std::move(homotopy);
  return j;
}

std::string census_table(const CensusReport& report) {
  std::ostringstream os;
  os << "# dim=" << report.dim << " max_weight=" << report.max_weight
     << " vectors=" << report.vectors
     << " homeo_classes=" << report.homeo_class_count()
     << " homotopy_classes=" << report.homotopy_class_count()
     << " refinement_violations=" << report.refinement_violations << '\n';
  os << "homeo_class\thomotopy_class\tmembers\trepresentative\n";
  for (const auto& rec : report.classes) {
    os << rec.homeo_class.to_string() << '\t' << rec.homotopy_class.to_string()
       << '\t' << rec.members.size() << '\t' << rec.representative.to_string()
       << '\n';
  }
  return os.str();
}

Json split_report(const PLocalRational& x, const PrimeSet& primes) {
  const UnitSplit s = unit_split(x, primes);
  Json j = header("split");
  j["x"] = x.to_string();
  j["primes"] = std::vector<Weight>(primes.begin(), primes.end());
  j["unit_part"] = s.unit_part.to_string();
  j["prime_part"] = s.prime_part.to_string();
  return j;
}

namespace {

std::uint64_t default_census_limit() {
  const char* env = std::getenv(kCensusLimitEnv);
  if (env == nullptr || *env == '\0') return CensusOptions{}.limit;
  const auto parsed = parse_unsigned_list(env);
  if (parsed.size() != 1) {
    throw InvalidInput(std::string(kCensusLimitEnv) + " must be a single integer");
  }
  return parsed.front();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Invariants and classification of weighted projective spaces",
               "wps"};
  app.require_subcommand(1);

  std::string weights_a;
  std::string weights_b;
  std::string support_text;
  std::string primes_text;
  std::string rational_text;
  Weight lens_k = 1;
  std::size_t census_dim = 1;
  Weight census_max = 1;
  std::uint64_t census_limit = 0;
  unsigned census_threads = 0;
  std::string census_format = "json";
  bool census_members = false;

  auto* normalize_cmd = app.add_subcommand(
      "normalize", "Normalise a weight vector and list the moves applied");
  normalize_cmd->add_option("weights", weights_a, "e.g. 6,10,15")->required();

  auto* invariants_cmd = app.add_subcommand(
      "invariants", "p-contents, chi*, l-sequence and cohomology ring");
  invariants_cmd->add_option("weights", weights_a)->required();

  auto* compare_cmd = app.add_subcommand(
      "compare", "Decide homeomorphism and homotopy equivalence");
  compare_cmd->add_option("first", weights_a)->required();
  compare_cmd->add_option("second", weights_b)->required();

  auto* lens_cmd = app.add_subcommand("lens", "Cohomology of the lens space L(k; w)");
  lens_cmd->add_option("k", lens_k)->required();
  lens_cmd->add_option("weights", weights_a)->required();

  auto* stratum_cmd = app.add_subcommand(
      "stratum", "Local chart and local homology order of a stratum");
  stratum_cmd->add_option("weights", weights_a)->required();
  stratum_cmd->add_option("--support", support_text,
                          "0-based indices of the nonzero coordinates")
      ->required();

  auto* cells_cmd = app.add_subcommand(
      "cells", "Cell decomposition of a divisor-chain space");
  cells_cmd->add_option("weights", weights_a)->required();

  auto* census_cmd = app.add_subcommand(
      "census", "Classify all sorted weight vectors up to a bound");
  census_cmd->add_option("--dim", census_dim, "complex dimension n")->required();
  census_cmd->add_option("--max-weight", census_max, "largest weight W")->required();
  census_cmd->add_option("--limit", census_limit,
                         std::string("vector budget (default from ") +
                             kCensusLimitEnv + " or 10000000)");
  census_cmd->add_option("--threads", census_threads, "worker threads, 0 = auto");
  census_cmd->add_option("--format", census_format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  census_cmd->add_flag("--members", census_members,
                       "list every member vector in the JSON output");

  auto* split_cmd = app.add_subcommand(
      "split", "Split a rational into a Z_P unit and a P-supported part");
  split_cmd->add_option("rational", rational_text, "e.g. -4/9")->required();
  split_cmd->add_option("--primes", primes_text, "e.g. 2,3")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    Json report;
    if (normalize_cmd->parsed()) {
      report = normalize_report(WeightVector::parse(weights_a));
    } else if (invariants_cmd->parsed()) {
      report = invariants_report(WeightVector::parse(weights_a));
    } else if (compare_cmd->parsed()) {
      report = compare_report(WeightVector::parse(weights_a),
                              WeightVector::parse(weights_b));
    } else if (lens_cmd->parsed()) {
      report = lens_report(lens_k, WeightVector::parse(weights_a));
    } else if (stratum_cmd->parsed()) {
      report = stratum_report(WeightVector::parse(weights_a),
                              parse_index_set(support_text));
    } else if (cells_cmd->parsed()) {
      report = cells_report(WeightVector::parse(weights_a));
    } else if (census_cmd->parsed()) {
      CensusOptions options;
      options.dim = census_dim;
      options.max_weight = census_max;
      options.limit = census_limit != 0 ? census_limit : default_census_limit();
      options.threads = census_threads;
      options.keep_members = census_members || census_format == "table";
      const CensusReport result = census(options);
      if (census_format == "table") {
        out << census_table(result);
        return kExitOk;
      }
      report = census_report(result, census_members);
    } else if (split_cmd->parsed()) {
      report = split_report(PLocalRational::parse(rational_text),
                            PrimeSet(parse_unsigned_list(primes_text)));
    }
    out << report.dump(2) << '\n';
    return kExitOk;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << " (processed " << e.processed() << " of "
        << e.required() << ")\n";
    return kExitResourceLimit;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const NotAnElement& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const InconsistentData& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace wps
