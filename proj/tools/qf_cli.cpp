// Command-line front end. Parses arguments, loads fixtures, and delegates all
// computation to the shared-library C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "quasiflat/quasiflat.h"

namespace {

using Json = nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 20260810ULL;

struct Options {
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
  std::string format = "text";
  double tol = 0.0;  // 0 means command default
  long samples = 0;  // 0 means command default
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Inline JSON or @path indirection.
std::string spec_text(const std::string& spec) {
  if (!spec.empty() && spec.front() == '@') return slurp(spec.substr(1));
  return spec;
}

class ApiError : public std::runtime_error {
 public:
  ApiError(qf_status status, std::string message)
      : std::runtime_error(std::move(message)), status_(status) {}
  qf_status status() const { return status_; }

 private:
  qf_status status_;
};

std::string check(qf_status status, char* owned) {
  if (status != QF_OK) {
    qf_string_free(owned);
    throw ApiError(status, qf_last_error());
  }
  std::string out = owned ? owned : "";
  qf_string_free(owned);
  return out;
}

struct GroupHandle {
  qf_group* ptr = nullptr;
  explicit GroupHandle(const std::string& json_text) {
    if (qf_group_parse(json_text.c_str(), &ptr) != QF_OK)
      throw ApiError(QF_ERR_PARSE, qf_last_error());
  }
  ~GroupHandle() { qf_group_free(ptr); }
};

struct SquareHandle {
  qf_square* ptr = nullptr;
  explicit SquareHandle(const std::string& json_text) {
    if (qf_square_parse(json_text.c_str(), &ptr) != QF_OK)
      throw ApiError(QF_ERR_PARSE, qf_last_error());
  }
  ~SquareHandle() { qf_square_free(ptr); }
};

struct FamilyHandle {
  qf_family* ptr = nullptr;
  explicit FamilyHandle(const std::string& json_text) {
    if (qf_family_parse(json_text.c_str(), &ptr) != QF_OK)
      throw ApiError(QF_ERR_PARSE, qf_last_error());
  }
  ~FamilyHandle() { qf_family_free(ptr); }
};

void flatten(const Json& value, const std::string& prefix, std::ostream& out) {
  if (value.is_object()) {
    for (const auto& [key, sub] : value.items())
      flatten(sub, prefix.empty() ? key : prefix + "." + key, out);
  } else if (value.is_array()) {
    out << prefix << "," << value.dump() << "\n";
  } else {
    out << prefix << "," << value.dump() << "\n";
  }
}

void render_text(const Json& report, std::ostream& out) {
  if (report.contains("criteria")) {
    for (const auto& c : report.at("criteria")) {
      out << "criterion " << c.at("id").get<int>() << " [" << c.at("name").get<std::string>()
          << "] " << (c.at("pass").get<bool>() ? "PASS" : "FAIL") << " - "
          << c.at("details").get<std::string>() << "\n";
    }
    out << (report.at("pass").get<bool>() ? "selftest PASS" : "selftest FAIL") << "\n";
    return;
  }
  for (const auto& [key, value] : report.items()) {
    if (value.is_array() && value.size() > 12) {
      out << key << ": [" << value.size() << " entries]\n";
    } else {
      out << key << ": " << value.dump() << "\n";
    }
  }
}

int emit(const Options& options, const std::string& command, const Json& config,
         const std::string& report_text, bool generative) {
  Json report = Json::parse(report_text);
  report["command"] = command;
  report["config"] = config;
  report["config"]["seed"] = options.seed;
  report["version"] = qf_version();

  if (options.json || options.format == "json") {
    std::cout << report.dump() << "\n";
  } else if (options.format == "csv") {
    flatten(report, "", std::cout);
  } else {
    render_text(report, std::cout);
  }
  if (generative) return 0;
  return report.value("pass", true) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flat and quasi-flat matrix models of quantum permutation groups"};
  app.require_subcommand(1);

  Options options;
  app.add_option("--seed", options.seed, "random seed (default 20260810)");
  app.add_flag("--json", options.json, "emit the JSON report");
  app.add_option("--format", options.format, "output format: json, text, csv")
      ->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--tol", options.tol, "tolerance override");
  app.add_option("--samples", options.samples, "sample count override");

  // orbits
  auto* orbits = app.add_subcommand("orbits", "orbit decomposition of a group or pattern");
  std::string orbits_group, orbits_pattern;
  orbits->add_option("--group", orbits_group, "group JSON file");
  orbits->add_option("--pattern", orbits_pattern, "0/1 support pattern JSON file");

  // latin
  auto* latin = app.add_subcommand("latin", "sparse Latin squares");
  auto* latin_enum = latin->add_subcommand("enumerate", "enumerate squares");
  int ln = 0, lk = 0;
  bool count_only = false;
  latin_enum->add_option("--n", ln, "size")->required();
  latin_enum->add_option("--k", lk, "symbol count")->required();
  latin_enum->add_flag("--count-only", count_only, "print only the count");
  auto* latin_adm = latin->add_subcommand("admissible", "squares whose group fits inside G");
  std::string latin_adm_group;
  latin_adm->add_option("--n", ln, "size")->required();
  latin_adm->add_option("--k", lk, "symbol count")->required();
  latin_adm->add_option("--group", latin_adm_group, "group JSON file")->required();
  auto* latin_group = latin->add_subcommand("group", "group generated by a square");
  std::string latin_group_square;
  latin_group->add_option("--square", latin_group_square, "square JSON file")->required();

  // model
  auto* model = app.add_subcommand("model", "model families");
  std::string family_spec, word_spec, point_file;
  auto* model_sample = model->add_subcommand("sample", "sample a model point");
  model_sample->add_option("--family", family_spec, "family JSON (inline or @file)")
      ->required();
  auto* model_eval = model->add_subcommand("eval", "evaluate a word at a point");
  model_eval->add_option("--family", family_spec, "family JSON (inline or @file)")->required();
  model_eval->add_option("--word", word_spec, "word, e.g. 1:2,2:1")->required();
  model_eval->add_option("--point", point_file, "point JSON file")->required();
  auto* model_trace = model->add_subcommand("trace", "Monte Carlo trace state of a word");
  model_trace->add_option("--family", family_spec, "family JSON (inline or @file)")
      ->required();
  model_trace->add_option("--word", word_spec, "word, e.g. 1:2,2:1")->required();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "verdict engines");
  auto* an_faithful = analyze->add_subcommand("faithful", "inner-faithfulness word scan");
  int max_len = 4;
  an_faithful->add_option("--family", family_spec, "family JSON (inline or @file)")
      ->required();
  an_faithful->add_option("--max-len", max_len, "maximum word length");
  auto* an_stationary = analyze->add_subcommand("stationary", "classical stationarity check");
  std::string st_group;
  int st_k = 0, max_degree = 3;
  bool exact = false;
  an_stationary->add_option("--group", st_group, "group JSON file")->required();
  an_stationary->add_option("--k", st_k, "orbit size K")->required();
  an_stationary->add_flag("--exact", exact, "exact rational mode");
  an_stationary->add_option("--max-degree", max_degree, "maximum word length");
  auto* an_cesaro = analyze->add_subcommand("cesaro", "Cesaro walk toward the Haar measure");
  std::string cs_square;
  long kmax = 10000;
  an_cesaro->add_option("--square", cs_square, "square JSON file")->required();
  an_cesaro->add_option("--kmax", kmax, "maximum number of Cesaro terms");
  auto* an_thoma = analyze->add_subcommand("thoma", "induced-model stationarity");
  std::string th_group, th_subgroup;
  an_thoma->add_option("--group", th_group, "group JSON file")->required();
  an_thoma->add_option("--subgroup", th_subgroup, "abelian subgroup JSON file")->required();
  auto* an_obstruction = analyze->add_subcommand("obstruction", "commutation negative control");
  int ob_k = 2;
  an_obstruction->add_option("--k", ob_k, "cyclic order K");

  // selftest
  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  int criterion = 0;
  selftest->add_option("--criterion", criterion, "run a single criterion (1..10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*orbits) {
      if (!orbits_group.empty()) {
        GroupHandle g(slurp(orbits_group));
        char* report = nullptr;
        const qf_status s = qf_group_orbits(g.ptr, &report);
        return emit(options, "orbits", Json{{"group", orbits_group}}, check(s, report), true);
      }
      if (!orbits_pattern.empty()) {
        char* report = nullptr;
        const qf_status s = qf_orbits_from_pattern(slurp(orbits_pattern).c_str(), &report);
        return emit(options, "orbits", Json{{"pattern", orbits_pattern}}, check(s, report),
                    true);
      }
      std::cerr << "orbits: need --group or --pattern\n";
      return 2;
    }

    if (*latin_enum) {
      char* report = nullptr;
      const qf_status s = qf_latin_enumerate(ln, lk, count_only ? 1 : 0, &report);
      const std::string text = check(s, report);
      if (count_only && options.format == "text" && !options.json) {
        std::cout << Json::parse(text).at("count").get<long long>() << "\n";
        return 0;
      }
      return emit(options, "latin enumerate", Json{{"n", ln}, {"k", lk}}, text, true);
    }
    if (*latin_adm) {
      GroupHandle g(slurp(latin_adm_group));
      char* report = nullptr;
      const qf_status s = qf_latin_admissible(ln, lk, g.ptr, &report);
      return emit(options, "latin admissible",
                  Json{{"n", ln}, {"k", lk}, {"group", latin_adm_group}}, check(s, report),
                  true);
    }
    if (*latin_group) {
      SquareHandle sq(slurp(latin_group_square));
      char* report = nullptr;
      const qf_status s = qf_square_hopf_group(sq.ptr, 0, &report);
      return emit(options, "latin group", Json{{"square", latin_group_square}},
                  check(s, report), true);
    }

    if (*model_sample) {
      FamilyHandle f(spec_text(family_spec));
      char* report = nullptr;
      const qf_status s = qf_model_sample(f.ptr, options.seed, &report);
      return emit(options, "model sample", Json{{"family", Json::parse(spec_text(family_spec))}},
                  check(s, report), true);
    }
    if (*model_eval) {
      FamilyHandle f(spec_text(family_spec));
      char* report = nullptr;
      const qf_status s =
          qf_model_eval(f.ptr, word_spec.c_str(), slurp(point_file).c_str(), &report);
      Json wrapped{{"matrix", Json::parse(check(s, report))}};
      return emit(options, "model eval",
                  Json{{"family", Json::parse(spec_text(family_spec))}, {"word", word_spec}},
                  wrapped.dump(), true);
    }
    if (*model_trace) {
      FamilyHandle f(spec_text(family_spec));
      const long n = options.samples > 0 ? options.samples : 10000;
      char* report = nullptr;
      const qf_status s =
          qf_model_trace(f.ptr, word_spec.c_str(), n, options.seed, &report);
      return emit(options, "model trace",
                  Json{{"family", Json::parse(spec_text(family_spec))},
                       {"word", word_spec},
                       {"samples", n}},
                  check(s, report), true);
    }

    if (*an_faithful) {
      FamilyHandle f(spec_text(family_spec));
      const long n = options.samples > 0 ? options.samples : 100;
      const double tol = options.tol > 0 ? options.tol : 1e-6;
      char* report = nullptr;
      const qf_status s =
          qf_analyze_faithful(f.ptr, max_len, n, tol, options.seed, &report);
      return emit(options, "analyze faithful",
                  Json{{"family", Json::parse(spec_text(family_spec))},
                       {"max_len", max_len},
                       {"samples", n},
                       {"tol", tol}},
                  check(s, report), false);
    }
    if (*an_stationary) {
      GroupHandle g(slurp(st_group));
      const long n = options.samples > 0 ? options.samples : 100000;
      char* report = nullptr;
      const qf_status s = qf_analyze_stationary(g.ptr, st_k, exact ? 1 : 0, max_degree,
                                                exact ? 0 : n, options.seed, &report);
      return emit(options, "analyze stationary",
                  Json{{"group", st_group},
                       {"k", st_k},
                       {"exact", exact},
                       {"max_degree", max_degree},
                       {"samples", exact ? 0 : n}},
                  check(s, report), false);
    }
    if (*an_cesaro) {
      SquareHandle sq(slurp(cs_square));
      const double tol = options.tol > 0 ? options.tol : 1e-6;
      char* report = nullptr;
      const qf_status s = qf_analyze_cesaro(sq.ptr, kmax, tol, &report);
      return emit(options, "analyze cesaro",
                  Json{{"square", cs_square}, {"kmax", kmax}, {"tol", tol}},
                  check(s, report), false);
    }
    if (*an_thoma) {
      GroupHandle g(slurp(th_group));
      GroupHandle h(slurp(th_subgroup));
      char* report = nullptr;
      const qf_status s = qf_analyze_thoma(g.ptr, h.ptr, &report);
      return emit(options, "analyze thoma",
                  Json{{"group", th_group}, {"subgroup", th_subgroup}}, check(s, report),
                  false);
    }
    if (*an_obstruction) {
      const long n = options.samples > 0 ? options.samples : 100;
      char* report = nullptr;
      const qf_status s = qf_analyze_obstruction(ob_k, n, options.seed, &report);
      return emit(options, "analyze obstruction", Json{{"k", ob_k}, {"samples", n}},
                  check(s, report), false);
    }

    if (*selftest) {
      char* report = nullptr;
      const qf_status s = qf_selftest(options.seed, criterion, options.tol, &report);
      return emit(options, "selftest",
                  Json{{"criterion", criterion}, {"tol_override", options.tol}},
                  check(s, report), false);
    }
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return (e.status() == QF_ERR_PARSE || e.status() == QF_ERR_INVALID_ARGUMENT) ? 2 : 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
