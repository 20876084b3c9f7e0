#include "core/serialize.hpp"

namespace qf {

namespace {

Json word_json(const ReducedWord& w) { return word_to_string(w); }

std::string survival_name(Survival s) {
  return s == Survival::survives ? "survives" : "not-separated";
}

}  // namespace

Json to_json(const Permutation& p) { return Json(p.images()); }

Permutation permutation_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::parse_error, "permutation: expected array");
  return Permutation(j.get<std::vector<int>>());
}

Json to_json(const PermutationGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators) gens.push_back(to_json(p));
  return Json{{"degree", g.degree}, {"generators", gens}};
}

PermutationGroup group_from_json(const Json& j) {
  std::vector<Permutation> gens;
  const Json& list = j.is_object() ? j.at("generators") : j;
  for (const auto& item : list) gens.push_back(permutation_from_json(item));
  if (gens.empty() && j.is_object() && j.contains("degree"))
    gens.push_back(Permutation::identity(j.at("degree").get<int>()));
  return generate_group(gens);
}

Json to_json(const GroupMeasure& m) {
  Json out = Json::array();
  for (const auto& [p, w] : m.weights())
    out.push_back(Json{{"perm", to_json(p)}, {"weight", w}});
  return out;
}

GroupMeasure measure_from_json(const Json& j) {
  std::map<Permutation, double> weights;
  int degree = 0;
  for (const auto& item : j) {
    Permutation p = permutation_from_json(item.at("perm"));
    degree = p.degree();
    weights[std::move(p)] += item.at("weight").get<double>();
  }
  return GroupMeasure(degree, std::move(weights));
}

Json to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix cmatrix_from_json(const Json& j) {
  const int rows = static_cast<int>(j.size());
  if (rows == 0) throw Error(ErrorCode::parse_error, "matrix: empty");
  const int cols = static_cast<int>(j.at(0).size());
  CMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const Json& cell = j.at(r).at(c);
      m(r, c) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
    }
  return m;
}

Json to_json(const BMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

BMatrix bmatrix_from_json(const Json& j) {
  const int rows = static_cast<int>(j.size());
  if (rows == 0) throw Error(ErrorCode::parse_error, "pattern: empty");
  const int cols = static_cast<int>(j.at(0).size());
  BMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = j.at(r).at(c).get<int>();
  return m;
}

Json to_json(const ProjectionFrame& f) {
  Json projections = Json::array();
  for (const auto& p : f.projections) projections.push_back(to_json(p));
  Json out{{"dimension", f.dimension}, {"projections", projections}};
  if (f.source_unitary) out["source_unitary"] = to_json(*f.source_unitary);
  return out;
}

ProjectionFrame frame_from_json(const Json& j) {
  if (j.contains("source_unitary")) return frame_from_unitary(cmatrix_from_json(j.at("source_unitary")));
  ProjectionFrame f;
  f.dimension = j.at("dimension").get<int>();
  for (const auto& p : j.at("projections")) f.projections.push_back(cmatrix_from_json(p));
  return f;
}

Json to_json(const SparseLatinSquare& s) { return Json(s.grid); }

SparseLatinSquare square_from_json(const Json& j) {
  std::vector<std::vector<int>> grid;
  int k = 0;
  const Json* cells = &j;
  if (j.is_object()) {
    cells = &j.at("grid");
    if (j.contains("k")) k = j.at("k").get<int>();
  }
  for (const auto& row : *cells) grid.push_back(row.get<std::vector<int>>());
  if (k == 0)
    for (const auto& row : grid)
      for (int v : row) k = std::max(k, v);
  return make_square(std::move(grid), k);
}

Json to_json(const MagicValidation& v) {
  Json defects = Json::array();
  for (const auto& d : v.defects)
    defects.push_back(Json{{"kind", d.kind}, {"i", d.i}, {"j", d.j}, {"value", d.value}});
  return Json{{"passed", v.passed}, {"max_defect", v.max_defect}, {"defects", defects}};
}

Json to_json(const OrbitDecomposition& d) {
  return Json{{"blocks", d.blocks},
              {"epsilon", to_json(d.epsilon)},
              {"support_was_equivalence", d.support_was_equivalence}};
}

Json to_json(const ModelFamily& f) {
  Json out{{"variant", family_name(f)}};
  std::visit(
      [&](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, CyclicFlatFamily> ||
                      std::is_same_v<T, FreePairWithCenterFamily>) {
          out["k"] = fam.k;
        } else if constexpr (std::is_same_v<T, FreeProductFamily>) {
          out["k"] = fam.k;
          out["m"] = fam.m;
        } else if constexpr (std::is_same_v<T, DirectProductPartsFamily>) {
          out["k"] = fam.k;
          out["parts"] = fam.parts;
        } else if constexpr (std::is_same_v<T, AmalgamatedFamily> ||
                             std::is_same_v<T, CommutingPowersFamily>) {
          out["k"] = fam.k;
          out["l"] = fam.l;
          out["m"] = fam.m;
        } else if constexpr (std::is_same_v<T, ClassicalFamily>) {
          out["square"] = to_json(fam.square);
        } else if constexpr (std::is_same_v<T, InducedFamily>) {
          out["group"] = to_json(fam.group);
          out["subgroup"] = to_json(fam.subgroup);
        }
      },
      f);
  return out;
}

ModelFamily family_from_json(const Json& j) {
  const std::string variant = j.at("variant").get<std::string>();
  ModelFamily family;
  if (variant == "cyclic_flat") {
    family = CyclicFlatFamily{j.at("k").get<int>()};
  } else if (variant == "free_product") {
    family = FreeProductFamily{j.at("k").get<int>(), j.at("m").get<int>()};
  } else if (variant == "free_product_of_direct_products") {
    family = DirectProductPartsFamily{j.at("k").get<int>(),
                                      j.at("parts").get<std::vector<int>>()};
  } else if (variant == "amalgamated") {
    family = AmalgamatedFamily{j.at("k").get<int>(), j.at("l").get<int>(),
                               j.at("m").get<int>()};
  } else if (variant == "commuting_powers") {
    family = CommutingPowersFamily{j.at("k").get<int>(), j.at("l").get<int>(),
                                   j.at("m").get<int>()};
  } else if (variant == "free_pair_with_center") {
    family = FreePairWithCenterFamily{j.at("k").get<int>()};
  } else if (variant == "classical") {
    family = ClassicalFamily{square_from_json(j.at("square"))};
  } else if (variant == "induced_virtually_abelian") {
    family = InducedFamily{group_from_json(j.at("group")),
                           group_from_json(j.at("subgroup"))};
  } else {
    throw Error(ErrorCode::parse_error, "unknown family variant: " + variant);
  }
  validate_family(family);
  return family;
}

Json to_json(const ModelFamily& f, const ModelPoint& p) {
  Json out{{"family", family_name(f)}};
  if (!p.unitaries.empty()) {
    Json us = Json::array();
    for (const auto& u : p.unitaries) us.push_back(to_json(u));
    out["unitaries"] = us;
  }
  if (!p.permutations.empty()) {
    Json ps = Json::array();
    for (const auto& perm : p.permutations) ps.push_back(to_json(perm));
    out["permutations"] = ps;
  }
  if (p.frame.dimension > 0) out["frame"] = to_json(p.frame);
  if (p.character >= 0) out["character"] = p.character;
  return out;
}

ModelPoint point_from_json(const ModelFamily& f, const Json& j) {
  ModelPoint p;
  if (j.contains("unitaries"))
    for (const auto& u : j.at("unitaries")) p.unitaries.push_back(cmatrix_from_json(u));
  if (j.contains("permutations"))
    for (const auto& perm : j.at("permutations"))
      p.permutations.push_back(permutation_from_json(perm));
  if (j.contains("frame")) p.frame = frame_from_json(j.at("frame"));
  if (j.contains("character")) p.character = j.at("character").get<int>();
  if (point_defect(f, p) > 1e-8)
    throw Error(ErrorCode::numeric, "model point violates the family invariants");
  return p;
}

Json to_json(const ReducedWord& w) { return word_json(w); }

Json to_json(const StateEstimate& e) {
  return Json{{"mean", Json::array({e.mean.real(), e.mean.imag()})},
              {"stderr", e.stderr_of_mean},
              {"samples", e.samples},
              {"seed", e.seed}};
}

Json to_json(const FaithfulnessReport& r) {
  Json words = Json::array();
  for (const auto& row : r.words) {
    words.push_back(Json{{"word", word_json(row.word)},
                         {"verdict", survival_name(row.stats.verdict)},
                         {"max_deviation", row.stats.max_deviation},
                         {"witness_sample", row.stats.witness_sample}});
  }
  return Json{{"family", r.family},
              {"max_length", r.max_length},
              {"samples", r.samples},
              {"tol", r.tol},
              {"seed", r.seed},
              {"word_count", r.words.size()},
              {"pass", r.all_survive},
              {"words", words}};
}

Json to_json(const CesaroReport& r) {
  Json traj = Json::array();
  for (const auto& c : r.trajectory)
    traj.push_back(Json{{"k", c.k}, {"tv", c.tv_to_uniform}});
  return Json{{"pass", r.passed},
              {"k_reached", r.k_reached},
              {"tv_at_kmax", r.tv_at_kmax},
              {"k_max", r.k_max},
              {"tol", r.tol},
              {"group_order", r.group_order},
              {"trajectory", traj}};
}

Json to_json(const StationarityReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json word = Json::array();
    for (const auto& [i, j] : row.word) word.push_back(Json::array({i, j}));
    Json item{{"word", word},
              {"haar", row.haar_value},
              {"model", row.model_value},
              {"defect", row.defect}};
    if (r.mode == StationarityMode::exact)
      item["exact_zero"] = row.exact_zero;
    else
      item["stderr"] = row.stderr_of_mean;
    rows.push_back(std::move(item));
  }
  return Json{{"mode", r.mode == StationarityMode::exact ? "exact" : "monte-carlo"},
              {"pass", r.pass},
              {"square_count", r.square_count},
              {"words", rows}};
}

Json to_json(const ThomaReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"element", to_json(row.element)},
                        {"value", Json::array({row.value.real(), row.value.imag()})},
                        {"defect", row.defect}});
  }
  return Json{{"pass", r.pass}, {"index", r.index}, {"elements", rows}};
}

Json to_json(const ObstructionReport& r) {
  Json singles = Json::array();
  for (const auto& row : r.single_generators) {
    singles.push_back(Json{{"word", word_json(row.word)},
                           {"verdict", survival_name(row.stats.verdict)},
                           {"max_deviation", row.stats.max_deviation}});
  }
  return Json{{"pass", r.pass},
              {"k", r.k},
              {"samples", r.samples},
              {"max_commutator_norm", r.max_commutator_norm},
              {"commutator_free", survival_name(r.commutator_free.verdict)},
              {"commutator_central", survival_name(r.commutator_central.verdict)},
              {"single_generators", singles}};
}

}  // namespace qf
