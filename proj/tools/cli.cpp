#include "cli.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "haarmoments/characters.hpp"
#include "haarmoments/combinatorics.hpp"
#include "haarmoments/haar_mc.hpp"
#include "haarmoments/moments.hpp"
#include "haarmoments/tableaux.hpp"
#include "haarmoments/weingarten.hpp"

namespace haarmoments::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, text };

struct Settings {
  Format format = Format::text;
  int digits = 20;
};

// What a command produces: the JSON document, plus a flat row view of it
// for csv and text output.
struct Output {
  Json document;
  std::vector<Json> rows;
};

Json partition_json(const Partition& p) { return Json(p.parts()); }

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.is_null() ? "" : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  return s;
}

void emit(const Output& output, const Settings& settings, std::ostream& out) {
  switch (settings.format) {
    case Format::json:
      out << output.document.dump() << "\n";
      return;
    case Format::csv: {
      if (output.rows.empty()) return;
      bool first = true;
      for (const auto& [key, value] : output.rows.front().items()) {
        out << (first ? "" : ",") << csv_cell(key);
        first = false;
      }
      out << "\n";
      for (const Json& row : output.rows) {
        first = true;
        for (const auto& [key, value] : row.items()) {
          out << (first ? "" : ",") << csv_cell(value);
          first = false;
        }
        out << "\n";
      }
      return;
    }
    case Format::text:
      for (const Json& row : output.rows) {
        bool first = true;
        for (const auto& [key, value] : row.items()) {
          out << (first ? "" : " ") << key << "="
              << (value.is_string() ? value.get<std::string>() : value.dump());
          first = false;
        }
        out << "\n";
      }
      return;
  }
}

Json exact_fields(Json record, const BigRational& value, const Settings& settings) {
  record["exact"] = to_string(value);
  record["decimal"] = to_decimal(value, settings.digits);
  return record;
}

Output single(Json record) {
  Output o;
  o.rows.push_back(record);
  o.document = std::move(record);
  return o;
}

Partition parse_partition(const std::vector<int>& parts) {
  return Partition::from_unsorted(parts);
}

// --------------------------------------------------------------------------
// wg / char / moment / tables

Output wg_command(int d, int n, const std::optional<std::vector<int>>& cycle, const Settings& s) {
  if (cycle) {
    const Partition mu = parse_partition(*cycle);
    Json r{{"command", "wg"}, {"d", d}, {"n", n}, {"cycle_type", partition_json(mu)}};
    return single(exact_fields(std::move(r), weingarten(d, n, mu), s));
  }
  const auto table = weingarten_table(d, n);
  Output o;
  o.document = Json{{"command", "wg"}, {"d", d}, {"n", n}, {"values", Json::array()}};
  for (const Partition& mu : partitions_of(n)) {
    Json r = exact_fields(Json{{"cycle_type", partition_json(mu)}}, table->at(mu), s);
    o.document["values"].push_back(r);
    o.rows.push_back(std::move(r));
  }
  return o;
}

Output char_command(int n, const std::optional<std::vector<int>>& lambda,
                    const std::optional<std::vector<int>>& mu) {
  const auto table = character_table(n);
  if (lambda && mu) {
    const Partition shape = parse_partition(*lambda);
    const Partition cycles = parse_partition(*mu);
    return single(Json{{"command", "char"},
                       {"n", n},
                       {"lambda", partition_json(shape)},
                       {"mu", partition_json(cycles)},
                       {"value", to_string(character(shape, cycles))}});
  }
  std::vector<Partition> shapes = table->partitions();
  std::vector<Partition> classes = table->partitions();
  if (lambda) shapes = {parse_partition(*lambda)};
  if (mu) classes = {parse_partition(*mu)};

  Output o;
  o.document = Json{{"command", "char"}, {"n", n}, {"mu", Json::array()}, {"rows", Json::array()}};
  for (const Partition& c : classes) o.document["mu"].push_back(partition_json(c));
  for (const Partition& shape : shapes) {
    Json row{{"lambda", partition_json(shape)}};
    Json values = Json::array();
    for (const Partition& c : classes) {
      const std::string v = to_string(table->at(shape, c));
      row[c.to_string()] = v;
      values.push_back(v);
    }
    o.document["rows"].push_back(Json{{"lambda", partition_json(shape)}, {"values", values}});
    o.rows.push_back(std::move(row));
  }
  return o;
}

Output moment_trace_command(int d, int k, int n, const std::string& route, const Settings& s) {
  using Route = std::function<BigRational(int, int, int)>;
  const std::map<std::string, Route> routes{
      {"theorem1", trace_truncation_moment},
      {"subgroups", trace_truncation_moment_via_subgroups},
      {"expansion", expand_trace_power_and_integrate}};
  if (route != "all") {
    Json r{{"command", "moment trace"}, {"d", d}, {"k", k}, {"n", n}};
    r = exact_fields(std::move(r), routes.at(route)(d, k, n), s);
    r["route"] = route;
    return single(std::move(r));
  }
  Output o;
  o.document = Json{{"command", "moment trace"}, {"d", d}, {"k", k}, {"n", n},
                    {"routes", Json::array()}};
  for (const std::string name : {"theorem1", "subgroups", "expansion"}) {
    BigRational value;
    try {
      value = routes.at(name)(d, k, n);
    } catch (const std::invalid_argument&) {
      continue;  // outside this route's brute-force bounds
    }
    Json r{{"d", d}, {"k", k}, {"n", n}};
    r = exact_fields(std::move(r), value, s);
    r["route"] = name;
    o.document["routes"].push_back(r);
    o.rows.push_back(std::move(r));
  }
  return o;
}

Output tables_rains_command(int n, int d) {
  Output o;
  o.document = Json{{"command", "tables rains"}, {"n", n}, {"d", d}, {"rows", Json::array()}};
  BigInteger total = 0;
  // RSK: permutations with LIS <= d pair up tableaux with first row <= d.
  for (const Partition& shape : partitions_of(n)) {
    if (shape.part(0) > d) continue;
    const BigInteger f = standard_tableaux_count(shape);
    total += f * f;
    Json row{{"lambda", partition_json(shape)}, {"f", to_string(f)}, {"f_squared", to_string(BigInteger(f * f))}};
    o.document["rows"].push_back(row);
    o.rows.push_back(std::move(row));
  }
  o.document["total"] = to_string(total);
  o.rows.push_back(Json{{"lambda", "total"}, {"f", nullptr}, {"f_squared", to_string(total)}});
  return o;
}

// --------------------------------------------------------------------------
// verify

struct VerifyReport {
  std::string check;
  long checked = 0;
  std::optional<Json> counterexample;
};

Output verify_output(const VerifyReport& report) {
  Json r{{"command", "verify " + report.check},
         {"checked", report.checked},
         {"passed", !report.counterexample.has_value()}};
  if (report.counterexample) r["counterexample"] = *report.counterexample;
  return single(std::move(r));
}

VerifyReport verify_theorem1(int max_d, int max_n) {
  VerifyReport rep{"theorem1"};
  for (int d = 1; d <= max_d; ++d) {
    for (int k = 1; k <= d; ++k) {
      for (int n = 1; n <= max_n; ++n) {
        Json values{{"theorem1", to_string(trace_truncation_moment(d, k, n))}};
        if (n <= kMaxSubgroupRouteDegree) {
          values["subgroups"] = to_string(trace_truncation_moment_via_subgroups(d, k, n));
        }
        if (n <= kMaxExpansionDegree && k <= kMaxExpansionCorner) {
          values["expansion"] = to_string(expand_trace_power_and_integrate(d, k, n));
        }
        ++rep.checked;
        for (const auto& [route, v] : values.items()) {
          if (v != values["theorem1"]) {
            rep.counterexample = Json{{"d", d}, {"k", k}, {"n", n}, {"routes", values}};
            return rep;
          }
        }
      }
    }
  }
  return rep;
}

VerifyReport verify_entry(int max_d, int max_n) {
  VerifyReport rep{"entry"};
  for (int d = 1; d <= max_d; ++d) {
    for (int n = 1; n <= max_n; ++n) {
      const BigRational theorem = trace_truncation_moment(d, 1, n);
      const BigRational closed = single_entry_moment(d, n);
      const BigRational inverse_binomial(BigInteger(1), binomial(d + n - 1, n));
      ++rep.checked;
      if (theorem != closed || closed != inverse_binomial) {
        rep.counterexample = Json{{"d", d},
                                  {"k", 1},
                                  {"n", n},
                                  {"routes",
                                   {{"theorem1", to_string(theorem)},
                                    {"closed_form", to_string(closed)},
                                    {"inverse_binomial", to_string(inverse_binomial)}}}};
        return rep;
      }
    }
  }
  return rep;
}

VerifyReport verify_rains(int max_d, int max_n) {
  VerifyReport rep{"rains"};
  for (int n = 1; n <= std::min(max_n, kMaxLisPermutationDegree); ++n) {
    for (int d = 1; d <= max_d; ++d) {
      const BigRational theorem = trace_truncation_moment(d, d, n);
      const BigInteger lis = count_bounded_lis_permutations(n, d);
      ++rep.checked;
      if (theorem != BigRational(lis)) {
        rep.counterexample = Json{{"d", d},
                                  {"k", d},
                                  {"n", n},
                                  {"routes",
                                   {{"theorem1", to_string(theorem)},
                                    {"bounded_lis_count", to_string(lis)}}}};
        return rep;
      }
    }
  }
  return rep;
}

VerifyReport verify_kostka(int max_n, int max_k) {
  VerifyReport rep{"kostka"};
  for (int n = 0; n <= max_n; ++n) {
    for (const Partition& shape : partitions_of(n)) {
      for (int k = 1; k <= max_k; ++k) {
        BigInteger sum = 0;
        for (const Composition& alpha : weak_compositions(n, k)) sum += kostka_number(shape, alpha);
        ++rep.checked;
        if (sum != schur_at_ones(shape, k)) {
          rep.counterexample = Json{{"lambda", partition_json(shape)},
                                    {"k", k},
                                    {"kostka_sum", to_string(sum)},
                                    {"schur_at_ones", to_string(schur_at_ones(shape, k))}};
          return rep;
        }
      }
    }
  }
  return rep;
}

VerifyReport verify_characters(int max_n) {
  VerifyReport rep{"characters"};
  for (int n = 1; n <= max_n; ++n) {
    const auto table = character_table(n);
    const auto& parts = table->partitions();
    std::vector<BigInteger> class_sizes;
    for (const Partition& mu : parts) class_sizes.push_back(conjugacy_class_size(mu));
    const Partition identity_class(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (std::size_t a = 0; a < parts.size(); ++a) {
      ++rep.checked;
      if (table->at(parts[a], identity_class) != standard_tableaux_count(parts[a])) {
        rep.counterexample = Json{{"n", n}, {"lambda", partition_json(parts[a])},
                                  {"failure", "dimension"}};
        return rep;
      }
      for (std::size_t b = 0; b < parts.size(); ++b) {
        BigInteger inner = 0;
        for (std::size_t c = 0; c < parts.size(); ++c) {
          inner += class_sizes[c] * table->at(a, c) * table->at(b, c);
        }
        ++rep.checked;
        if (inner != (a == b ? factorial(n) : BigInteger(0))) {
          rep.counterexample = Json{{"n", n},
                                    {"lambda", partition_json(parts[a])},
                                    {"nu", partition_json(parts[b])},
                                    {"inner_product", to_string(inner)}};
          return rep;
        }
      }
    }
  }
  return rep;
}

VerifyReport verify_mc(int max_d, int max_n, const SamplingConfig& config) {
  VerifyReport rep{"mc"};
  for (int d = 1; d <= max_d; ++d) {
    for (int k = 1; k <= d; ++k) {
      for (int n = 1; n <= max_n; ++n) {
        const BigRational exact = trace_truncation_moment(d, k, n);
        const MomentEstimate est = estimate_trace_moment(d, k, n, config);
        ++rep.checked;
        if (!est.agrees_with(exact.get_d())) {
          rep.counterexample = Json{{"d", d},
                                    {"k", k},
                                    {"n", n},
                                    {"exact", to_string(exact)},
                                    {"estimate", est.mean},
                                    {"stderr", est.standard_error},
                                    {"z_score", est.z_score(exact.get_d())}};
          return rep;
        }
      }
    }
  }
  return rep;
}

// --------------------------------------------------------------------------
// mc

Json mc_fields(Json record, const MomentEstimate& est, const std::optional<BigRational>& exact) {
  record["estimate"] = est.mean;
  record["stderr"] = est.standard_error;
  record["samples"] = est.samples;
  if (exact) {
    record["exact"] = to_string(*exact);
    record["z_score"] = est.z_score(exact->get_d());
  } else {
    record["exact"] = nullptr;
    record["z_score"] = nullptr;
  }
  return record;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("HAAR_MOMENTS_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("HAAR_MOMENTS_SEED is not an unsigned integer: ") +
                                env);
  }
  return kDefaultSeed;
}

std::optional<BigRational> secular_exact(int d, int j, int n) {
  if (j == d) return BigRational(1);  // |det U| = 1
  if (static_cast<long long>(j) * n <= d && n <= kMaxMagicSquareOrder &&
      j <= kMaxMagicSquareLineSum) {
    return BigRational(magic_square_prediction(d, j, n));
  }
  return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and Monte Carlo moments of truncated Haar unitaries", "haar-moments"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings settings;
  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--digits", settings.digits, "Fractional digits in decimal renderings")
      ->check(CLI::Range(0, 1000));

  // Shared parameter storage; each subcommand binds what it needs.
  int d = 0, k = 0, n = 0, j = 0, max_d = 4, max_n = 3, max_k = 5;
  std::optional<std::vector<int>> cycle, lambda, mu;
  std::string route = "theorem1";
  std::int64_t samples = 200000;
  std::optional<std::uint64_t> seed;
  int workers = 1;

  auto* wg = app.add_subcommand("wg", "Weingarten function Wg(d, n, .)");
  wg->add_option("--d", d)->required()->check(CLI::PositiveNumber);
  wg->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  wg->add_option("--cycle-type", cycle, "Comma-separated cycle type, e.g. 2,1")->delimiter(',');

  auto* chr = app.add_subcommand("char", "Irreducible characters of S_n");
  chr->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  chr->add_option("--lambda", lambda, "Shape, e.g. 2,1")->delimiter(',');
  chr->add_option("--mu", mu, "Cycle type, e.g. 3")->delimiter(',');

  auto* moment = app.add_subcommand("moment", "Exact moments");
  moment->require_subcommand(1);
  auto* m_trace = moment->add_subcommand("trace", "E|Tr U_k|^{2n}");
  m_trace->add_option("--d", d)->required()->check(CLI::PositiveNumber);
  m_trace->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  m_trace->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  m_trace->add_option("--route", route)
      ->check(CLI::IsMember({"theorem1", "subgroups", "expansion", "all"}));
  auto* m_entry = moment->add_subcommand("entry", "E|u_ij|^{2n}");
  m_entry->add_option("--d", d)->required()->check(CLI::PositiveNumber);
  m_entry->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  auto* m_scaled = moment->add_subcommand("scaled", "d^n E|u_ij|^{2n} / n!");
  m_scaled->add_option("--d", d)->required()->check(CLI::PositiveNumber);
  m_scaled->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  auto* m_rains = moment->add_subcommand("rains", "E|Tr U|^{2n}");
  m_rains->add_option("--d", d)->required()->check(CLI::PositiveNumber);
  m_rains->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  auto* m_magic = moment->add_subcommand("magic", "E|Sc_j(U)|^{2n} = H_n(j), j n <= d");
  m_magic->add_option("--d", d)->required()->check(CLI::PositiveNumber);
  m_magic->add_option("--j", j)->required()->check(CLI::PositiveNumber);
  m_magic->add_option("--n", n)->required()->check(CLI::PositiveNumber);

  auto* tables = app.add_subcommand("tables", "Table exports");
  tables->require_subcommand(1);
  auto* t_rains = tables->add_subcommand("rains", "lambda, f^lambda, (f^lambda)^2 with len <= d");
  t_rains->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  t_rains->add_option("--d", d)->required()->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Cross-check identities; exit 1 on failure");
  verify->require_subcommand(1);
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--max-d", max_d)->check(CLI::PositiveNumber);
    sub->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
  };
  auto* v_thm = verify->add_subcommand("theorem1", "All exact routes agree");
  add_grid(v_thm);
  auto* v_entry = verify->add_subcommand("entry", "k = 1 matches 1/binom(d+n-1, n)");
  add_grid(v_entry);
  auto* v_rains = verify->add_subcommand("rains", "k = d matches bounded-LIS counts");
  add_grid(v_rains);
  auto* v_kostka = verify->add_subcommand("kostka", "sum_alpha K_{lambda,alpha} = s_lambda(1^k)");
  v_kostka->add_option("--max-n", max_n)->check(CLI::NonNegativeNumber);
  v_kostka->add_option("--max-k", max_k)->check(CLI::PositiveNumber);
  auto* v_chars = verify->add_subcommand("characters", "Orthogonality and dimensions");
  v_chars->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
  auto* v_mc = verify->add_subcommand("mc", "Exact values within 5 standard errors of MC");
  add_grid(v_mc);

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimates over Haar unitaries");
  mc->require_subcommand(1);
  auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--samples", samples)->check(CLI::Range(std::int64_t{100}, std::int64_t{1} << 40));
    sub->add_option("--seed", seed, "Master seed (default: $HAAR_MOMENTS_SEED or built-in)");
    sub->add_option("--workers", workers)->check(CLI::PositiveNumber);
  };
  add_sampling(v_mc);
  auto* mc_trace = mc->add_subcommand("trace", "|Tr U_k|^{2n}");
  mc_trace->add_option("--d", d)->required()->check(CLI::PositiveNumber);
  mc_trace->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  mc_trace->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  add_sampling(mc_trace);
  auto* mc_secular = mc->add_subcommand("secular", "|Sc_j(U)|^{2n}");
  mc_secular->add_option("--d", d)->required()->check(CLI::PositiveNumber);
  mc_secular->add_option("--j", j)->required()->check(CLI::PositiveNumber);
  mc_secular->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  add_sampling(mc_secular);
  auto* mc_law = mc->add_subcommand("entrylaw", "KS test of |u_11|^2 against Beta(1, d-1)");
  mc_law->add_option("--d", d)->required()->check(CLI::Range(2, 1 << 20));
  add_sampling(mc_law);

  std::vector<std::string> argv_storage{"haar-moments"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  settings.format = format_name == "json" ? Format::json
                    : format_name == "csv" ? Format::csv
                                           : Format::text;

  try {
    const SamplingConfig config{samples, resolve_seed(seed), workers};
    std::optional<VerifyReport> report;
    Output output;

    if (wg->parsed()) {
      output = wg_command(d, n, cycle, settings);
    } else if (chr->parsed()) {
      output = char_command(n, lambda, mu);
    } else if (m_trace->parsed()) {
      output = moment_trace_command(d, k, n, route, settings);
    } else if (m_entry->parsed()) {
      output = single(exact_fields(Json{{"command", "moment entry"}, {"d", d}, {"n", n}},
                                   single_entry_moment(d, n), settings));
    } else if (m_scaled->parsed()) {
      output = single(exact_fields(Json{{"command", "moment scaled"}, {"d", d}, {"n", n}},
                                   scaled_entry_moment_ratio(d, n), settings));
    } else if (m_rains->parsed()) {
      output = single(exact_fields(Json{{"command", "moment rains"}, {"d", d}, {"n", n}},
                                   BigRational(rains_moment(d, n)), settings));
    } else if (m_magic->parsed()) {
      output = single(exact_fields(
          Json{{"command", "moment magic"}, {"d", d}, {"j", j}, {"n", n}},
          BigRational(magic_square_prediction(d, j, n)), settings));
    } else if (t_rains->parsed()) {
      output = tables_rains_command(n, d);
    } else if (v_thm->parsed()) {
      report = verify_theorem1(max_d, max_n);
    } else if (v_entry->parsed()) {
      report = verify_entry(max_d, max_n);
    } else if (v_rains->parsed()) {
      report = verify_rains(max_d, max_n);
    } else if (v_kostka->parsed()) {
      report = verify_kostka(max_n, max_k);
    } else if (v_chars->parsed()) {
      report = verify_characters(max_n);
    } else if (v_mc->parsed()) {
      report = verify_mc(max_d, max_n, config);
    } else if (mc_trace->parsed()) {
      const MomentEstimate est = estimate_trace_moment(d, k, n, config);
      std::optional<BigRational> exact;
      if (n >= 1) exact = trace_truncation_moment(d, k, n);
      if (n == 0) exact = BigRational(1);
      output = single(mc_fields(
          Json{{"command", "mc trace"}, {"d", d}, {"k", k}, {"n", n}, {"seed", config.seed}},
          est, exact));
    } else if (mc_secular->parsed()) {
      const MomentEstimate est = estimate_secular_moment(d, j, n, config);
      output = single(mc_fields(
          Json{{"command", "mc secular"}, {"d", d}, {"j", j}, {"n", n}, {"seed", config.seed}},
          est, n == 0 ? std::optional<BigRational>(1) : secular_exact(d, j, n)));
    } else if (mc_law->parsed()) {
      const KsResult ks = truncation_entry_law_check(d, config);
      output = single(Json{{"command", "mc entrylaw"},
                           {"d", d},
                           {"seed", config.seed},
                           {"samples", ks.samples},
                           {"ks_statistic", ks.statistic},
                           {"threshold", ks.threshold},
                           {"passes", ks.passes()},
                           {"mean", ks.sample_mean},
                           {"exact_mean", to_string(single_entry_moment(d, 1))}});
    }

    if (report) {
      output = verify_output(*report);
      emit(output, settings, out);
      if (report->counterexample) {
        err << "verify " << report->check << ": counterexample "
            << report->counterexample->dump() << "\n";
        return kExitVerificationFailed;
      }
      return kExitSuccess;
    }
    emit(output, settings, out);
    return kExitSuccess;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace haarmoments::cli
