#include "quasiflat/quasiflat.h"

#include <cstring>
#include <string>

#include "core/acceptance.hpp"
#include "core/analysis.hpp"
#include "core/serialize.hpp"

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qf_status status_of(const qf::Error& e) {
  using qf::ErrorCode;
  switch (e.code()) {
    case ErrorCode::parse_error:
      return QF_ERR_PARSE;
    case ErrorCode::cap_exceeded:
      return QF_ERR_CAP_EXCEEDED;
    case ErrorCode::numeric:
      return QF_ERR_NUMERIC;
    case ErrorCode::empty_model_space:
    case ErrorCode::not_subgroup:
    case ErrorCode::not_normal:
    case ErrorCode::not_transitive:
      return QF_ERR_PRECONDITION;
    default:
      return QF_ERR_INVALID_ARGUMENT;
  }
}

template <typename F>
qf_status guarded(F&& body) {
  try {
    body();
    return QF_OK;
  } catch (const qf::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return QF_ERR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QF_ERR_INTERNAL;
  }
}

qf::Json parse_json(const char* text) {
  if (!text) throw qf::Error(qf::ErrorCode::parse_error, "null JSON input");
  return qf::Json::parse(text);
}

}  // namespace

struct qf_group {
  qf::PermutationGroup group;
};
struct qf_square {
  qf::SparseLatinSquare square;
};
struct qf_family {
  qf::ModelFamily family;
};

extern "C" {

const char* qf_version(void) { return qf::kVersion; }

const char* qf_last_error(void) { return g_last_error.c_str(); }

void qf_string_free(char* s) { delete[] s; }

qf_status qf_group_parse(const char* json, qf_group** out) {
  return guarded([&] {
    if (!out) throw qf::Error(qf::ErrorCode::invalid_argument, "null output pointer");
    *out = new qf_group{qf::group_from_json(parse_json(json))};
  });
}

void qf_group_free(qf_group* g) { delete g; }

qf_status qf_group_order(const qf_group* g, uint64_t* out) {
  return guarded([&] {
    if (!g || !out) throw qf::Error(qf::ErrorCode::invalid_argument, "null argument");
    *out = g->group.order();
  });
}

qf_status qf_group_orbits(const qf_group* g, char** report_json) {
  return guarded([&] {
    if (!g || !report_json)
      throw qf::Error(qf::ErrorCode::invalid_argument, "null argument");
    const auto blocks = qf::orbit_partition(g->group);
    qf::Json out{{"degree", g->group.degree},
                 {"order", g->group.order()},
                 {"blocks", blocks},
                 {"transitive", blocks.size() == 1}};
    *report_json = copy_string(out.dump());
  });
}

qf_status qf_square_parse(const char* json, qf_square** out) {
  return guarded([&] {
    if (!out) throw qf::Error(qf::ErrorCode::invalid_argument, "null output pointer");
    *out = new qf_square{qf::square_from_json(parse_json(json))};
  });
}

void qf_square_free(qf_square* s) { delete s; }

qf_status qf_square_validate(const qf_square* s, char** report_json) {
  return guarded([&] {
    if (!s || !report_json)
      throw qf::Error(qf::ErrorCode::invalid_argument, "null argument");
    const auto verdict = qf::validate_square(s->square.grid, s->square.k);
    qf::Json out{{"valid", verdict.valid}, {"defects", verdict.defects}};
    *report_json = copy_string(out.dump());
  });
}

qf_status qf_square_hopf_group(const qf_square* s, uint64_t cap, char** report_json) {
  return guarded([&] {
    if (!s || !report_json)
      throw qf::Error(qf::ErrorCode::invalid_argument, "null argument");
    const auto group = qf::hopf_image_group(s->square, cap ? cap : 1000000);
    qf::Json out{{"order", group.order()},
                 {"degree", group.degree},
                 {"generators", qf::to_json(group).at("generators")},
                 {"orbits", qf::orbit_partition(group)}};
    *report_json = copy_string(out.dump());
  });
}

qf_status qf_latin_enumerate(int n, int k, int count_only, char** report_json) {
  return guarded([&] {
    if (!report_json) throw qf::Error(qf::ErrorCode::invalid_argument, "null argument");
    qf::Json out{{"n", n}, {"k", k}};
    if (count_only) {
      out["count"] = qf::count_squares(n, k);
    } else {
      qf::Json squares = qf::Json::array();
      long long count = 0;
      qf::enumerate_squares(n, k, [&](const qf::SparseLatinSquare& s) {
        squares.push_back(qf::to_json(s));
        ++count;
        return true;
      });
      out["count"] = count;
      out["squares"] = std::move(squares);
    }
    *report_json = copy_string(out.dump());
  });
}

qf_status qf_latin_admissible(int n, int k, const qf_group* g, char** report_json) {
  return guarded([&] {
    if (!g || !report_json)
      throw qf::Error(qf::ErrorCode::invalid_argument, "null argument");
    const auto squares = qf::admissible_squares(n, k, g->group);
    qf::Json list = qf::Json::array();
    for (const auto& s : squares) list.push_back(qf::to_json(s));
    qf::Json out{{"n", n}, {"k", k}, {"count", squares.size()}, {"squares", list}};
    *report_json = copy_string(out.dump());
  });
}

qf_status qf_family_parse(const char* json, qf_family** out) {
  return guarded([&] {
    if (!out) throw qf::Error(qf::ErrorCode::invalid_argument, "null output pointer");
    *out = new qf_family{qf::family_from_json(parse_json(json))};
  });
}

void qf_family_free(qf_family* f) { delete f; }

qf_status qf_model_sample(const qf_family* f, uint64_t seed, char** point_json) {
  return guarded([&] {
    if (!f || !point_json)
      throw qf::Error(qf::ErrorCode::invalid_argument, "null argument");
    qf::Rng rng = qf::Rng::derive(seed, 0);
    const auto point = qf::sample_point(f->family, rng);
    qf::Json out = qf::to_json(f->family, point);
    out["seed"] = seed;
    out["defect"] = qf::point_defect(f->family, point);
    *point_json = copy_string(out.dump());
  });
}

qf_status qf_model_eval(const qf_family* f, const char* word, const char* point_json,
                        char** matrix_json) {
  return guarded([&] {
    if (!f || !word || !point_json || !matrix_json)
      throw qf::Error(qf::ErrorCode::invalid_argument, "null argument");
    const auto parsed_word = qf::word_from_string(f->family, word);
    const auto point = qf::point_from_json(f->family, parse_json(point_json));
    const auto matrix = qf::eval_word(f->family, point, parsed_word);
    *matrix_json = copy_string(qf::to_json(matrix).dump());
  });
}

qf_status qf_model_trace(const qf_family* f, const char* word, long samples, uint64_t seed,
                         char** report_json) {
  return guarded([&] {
    if (!f || !word || !report_json)
      throw qf::Error(qf::ErrorCode::invalid_argument, "null argument");
    const auto parsed_word = qf::word_from_string(f->family, word);
    const auto estimate = qf::mc_trace_state(f->family, parsed_word, samples, seed);
    qf::Json out = qf::to_json(estimate);
    out["word"] = qf::word_to_string(parsed_word);
    out["family"] = qf::family_name(f->family);
    *report_json = copy_string(out.dump());
  });
}

qf_status qf_analyze_faithful(const qf_family* f, int max_len, long samples, double tol,
                              uint64_t seed, char** report_json) {
  return guarded([&] {
    if (!f || !report_json)
      throw qf::Error(qf::ErrorCode::invalid_argument, "null argument");
    const auto report =
        qf::inner_faithfulness_scan(f->family, max_len, samples, tol, seed);
    *report_json = copy_string(qf::to_json(report).dump());
  });
}

qf_status qf_analyze_stationary(const qf_group* g, int k, int exact, int max_degree,
                                long samples, uint64_t seed, char** report_json) {
  return guarded([&] {
    if (!g || !report_json)
      throw qf::Error(qf::ErrorCode::invalid_argument, "null argument");
    const auto words = qf::all_coordinate_words(g->group.degree, max_degree);
    const auto report = qf::stationarity_check_classical(
        g->group, k, words,
        exact ? qf::StationarityMode::exact : qf::StationarityMode::monte_carlo, samples,
        seed);
    *report_json = copy_string(qf::to_json(report).dump());
  });
}

qf_status qf_analyze_cesaro(const qf_square* s, long k_max, double tol, char** report_json) {
  return guarded([&] {
    if (!s || !report_json)
      throw qf::Error(qf::ErrorCode::invalid_argument, "null argument");
    const auto report = qf::classical_cesaro_hopf_image(s->square, k_max, tol);
    *report_json = copy_string(qf::to_json(report).dump());
  });
}

qf_status qf_analyze_thoma(const qf_group* g, const qf_group* subgroup, char** report_json) {
  return guarded([&] {
    if (!g || !subgroup || !report_json)
      throw qf::Error(qf::ErrorCode::invalid_argument, "null argument");
    const auto report = qf::thoma_stationarity_check(g->group, subgroup->group);
    *report_json = copy_string(qf::to_json(report).dump());
  });
}

qf_status qf_analyze_obstruction(int k, long samples, uint64_t seed, char** report_json) {
  return guarded([&] {
    if (!report_json) throw qf::Error(qf::ErrorCode::invalid_argument, "null argument");
    const auto report = qf::commutation_obstruction_check(k, samples, seed);
    *report_json = copy_string(qf::to_json(report).dump());
  });
}

qf_status qf_orbits_from_pattern(const char* pattern_json, char** report_json) {
  return guarded([&] {
    if (!pattern_json || !report_json)
      throw qf::Error(qf::ErrorCode::invalid_argument, "null argument");
    const auto pattern = qf::bmatrix_from_json(parse_json(pattern_json));
    const auto d = qf::orbit_decomposition(pattern);
    qf::Json out = qf::to_json(d);
    const auto k = qf::quasi_transitivity(d);
    out["quasi_transitive"] = k.has_value();
    if (k) out["orbit_size"] = *k;
    *report_json = copy_string(out.dump());
  });
}

qf_status qf_selftest(uint64_t seed, int criterion, double tol_override,
                      char** report_json) {
  return guarded([&] {
    if (!report_json) throw qf::Error(qf::ErrorCode::invalid_argument, "null argument");
    qf::AcceptanceOptions options;
    options.seed = seed;
    if (tol_override > 0) options.match_tol = tol_override;
    const auto results = qf::run_acceptance(options, criterion);
    bool all = true;
    qf::Json list = qf::Json::array();
    for (const auto& r : results) {
      all = all && r.passed;
      list.push_back(qf::Json{{"id", r.id},
                              {"name", r.name},
                              {"pass", r.passed},
                              {"details", r.details}});
    }
    qf::Json out{{"pass", all},
                 {"criteria", list},
                 {"seed", seed},
                 {"version", qf::kVersion}};
    *report_json = copy_string(out.dump());
  });
}

}  // extern "C"
