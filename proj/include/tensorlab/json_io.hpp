#ifndef TENSORLAB_JSON_IO_HPP
#define TENSORLAB_JSON_IO_HPP

/// \file json_io.hpp
/// JSON forms of instances, tensors, and every report type.
///
/// Instance file:
///   {"field": {"kind": "prime_field", "p": 2}, "dims": [2, 2],
///    "vectors": [[[1, 0], [1, 0]], ...]}
/// Outer list over vectors, then factors, then coordinates. Rationals are
/// "num/den" strings; prime-field residues are integers. A dense tensor
/// replaces "vectors" by a row-major "entries" list. All user-facing index
/// sets are 1-based. Locations in errors are JSON pointers.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "tensorlab/chain.hpp"
#include "tensorlab/search.hpp"

namespace tensorlab {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::filesystem::path& path);
Json parse_json_text(const std::string& text);

Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& doc);
std::vector<std::size_t> dims_from_json(const Json& doc);

Json index_set_to_json(const IndexSet& s);
IndexSet index_set_from_json(const Json& j, std::size_t n, const std::string& where);

Json partition_to_json(const Partition& p);
Json chain_to_json(const Chain& c);
Json chain_problem_to_json(const ChainProblem& cp);
ChainProblem chain_problem_from_json(const Json& doc);
Json lemma_violation_to_json(const LemmaViolation& v);

Json verdict_to_json(const Verdict& v);
Json certificate_to_json(const UniquenessCertificate& c);
Json general_position_to_json(const GeneralPositionReport& r);
Json gamma_prediction_to_json(const GammaRankPrediction& p);
Json search_space_to_json(const SearchSpace& s);

template <ExactScalar S>
Json scalar_to_json(const S& x) {
  if constexpr (field_traits<S>::is_finite)
    return x.value();
  else
    return x.to_string();
}

template <ExactScalar S>
S scalar_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) {
      if constexpr (field_traits<S>::is_finite)
        return S(j.get<long long>());
      else
        return S(j.get<long long>());
    }
    if (j.is_string()) return field_traits<S>::parse(j.get<std::string>());
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), where);
  }
  throw Error(Errc::SchemaError, "scalars must be integers or strings", where);
}

template <ExactScalar S>
Json vector_to_json(const Vector<S>& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(scalar_to_json(v(i)));
  return out;
}

template <ExactScalar S>
Vector<S> vector_from_json(const Json& j, std::size_t expected, const std::string& where) {
  if (!j.is_array()) throw Error(Errc::SchemaError, "expected a coordinate list", where);
  if (j.size() != expected)
    throw Error(Errc::SchemaError, "expected " + std::to_string(expected) + " coordinates, got " + std::to_string(j.size()),
                where);
  Vector<S> v(static_cast<Index>(expected));
  for (std::size_t i = 0; i < expected; ++i) v(static_cast<Index>(i)) = scalar_from_json<S>(j[i], where + "/" + std::to_string(i));
  return v;
}

template <ExactScalar S>
Json product_vector_to_json(const ProductVector<S>& x) {
  Json out = Json::array();
  for (const auto& f : x.factors()) out.push_back(vector_to_json(f));
  return out;
}

template <ExactScalar S>
Json vector_set_to_json(const ProductVectorSet<S>& s) {
  Json doc;
  doc["field"] = field_to_json(field_traits<S>::spec());
  doc["dims"] = s.signature().dims();
  Json vs = Json::array();
  for (const auto& x : s) vs.push_back(product_vector_to_json(x));
  doc["vectors"] = std::move(vs);
  return doc;
}

template <ExactScalar S>
ProductVectorSet<S> vector_set_from_json(const Json& doc) {
  const auto dims = dims_from_json(doc);
  const ModeSignature sig(dims);
  if (!doc.contains("vectors") || !doc["vectors"].is_array() || doc["vectors"].empty())
    throw Error(Errc::SchemaError, "expected a nonempty \"vectors\" list", "/vectors");
  std::vector<ProductVector<S>> out;
  const auto& vs = doc["vectors"];
  for (std::size_t a = 0; a < vs.size(); ++a) {
    const std::string where = "/vectors/" + std::to_string(a);
    if (!vs[a].is_array() || vs[a].size() != dims.size())
      throw Error(Errc::SchemaError, "vector " + std::to_string(a + 1) + " needs " + std::to_string(dims.size()) + " factors",
                  where);
    std::vector<Vector<S>> factors;
    for (std::size_t j = 0; j < dims.size(); ++j) {
      factors.push_back(vector_from_json<S>(vs[a][j], dims[j], where + "/" + std::to_string(j)));
      if (is_zero(factors.back()))
        throw Error(Errc::ZeroFactor,
                    "factor j=" + std::to_string(j + 1) + " of vector a=" + std::to_string(a + 1) + " is zero",
                    where + "/" + std::to_string(j));
    }
    out.emplace_back(std::move(factors));
  }
  return ProductVectorSet<S>(std::move(out));
}

template <ExactScalar S>
Json tensor_to_json(const DenseTensor<S>& t) {
  Json doc;
  doc["field"] = field_to_json(field_traits<S>::spec());
  doc["dims"] = t.signature().dims();
  doc["entries"] = vector_to_json(t.entries());
  return doc;
}

template <ExactScalar S>
DenseTensor<S> tensor_from_json(const Json& doc, const std::string& key = "entries") {
  const ModeSignature sig(dims_from_json(doc));
  if (!doc.contains(key)) throw Error(Errc::SchemaError, "expected \"" + key + "\"", "/" + key);
  return DenseTensor<S>(sig, vector_from_json<S>(doc[key], sig.size(), "/" + key));
}

/// Tensor described by a document: its "entries", or the sum of its "vectors".
template <ExactScalar S>
DenseTensor<S> tensor_or_sum_from_json(const Json& doc) {
  if (doc.contains("entries")) return tensor_from_json<S>(doc);
  return sum_set(vector_set_from_json<S>(doc));
}

template <ExactScalar S>
Json decomposition_to_json(const std::vector<ProductVector<S>>& terms) {
  Json out = Json::array();
  for (const auto& x : terms) out.push_back(product_vector_to_json(x));
  return out;
}

template <ExactScalar S>
Json rank_result_to_json(const RankResult<S>& r) {
  Json out;
  out["rank"] = r.rank;
  out["lower_bound"] = r.lower_bound;
  out["method"] = r.method == RankMethod::flattening_bound_met ? "flattening_bound_met" : "exhaustive";
  if (r.witness) out["witness"] = decomposition_to_json(*r.witness);
  return out;
}

template <ExactScalar S>
Json uniqueness_to_json(const UniquenessCheck<S>& u) {
  Json out;
  out["unique"] = u.unique;
  out["count"] = u.count;
  Json ds = Json::array();
  for (const auto& d : u.decompositions) ds.push_back(decomposition_to_json(d));
  out["decompositions"] = std::move(ds);
  return out;
}

template <ExactScalar S>
Json pair_sum_to_json(const PairSum<S>& p) {
  Json out;
  out["kind"] = p.kind == PairKind::product ? "product" : (p.kind == PairKind::entangled ? "entangled" : "zero");
  out["nonparallel_modes"] = p.nonparallel_modes;
  if (p.factored) out["factored"] = product_vector_to_json(*p.factored);
  return out;
}

template <ExactScalar S>
Json subspace_category_to_json(const SubspaceCategory<S>& c) {
  Json out;
  out["category"] = c.category;
  out["lines_checked"] = c.lines_checked;
  Json lines = Json::array();
  for (const auto& t : c.product_lines) lines.push_back(vector_to_json(t.entries()));
  out["product_lines"] = std::move(lines);
  return out;
}

template <ExactScalar S>
Json pairing_to_json(const PairingResult& p) {
  Json out;
  if (p.sigma) {
    Json sigma = Json::array();
    for (auto b : *p.sigma) sigma.push_back(b + 1);
    out["pairing"] = std::move(sigma);
  } else {
    out["pairing"] = nullptr;
  }
  out["partition"] = partition_to_json(p.partition);
  return out;
}

template <ExactScalar S>
Json search_report_to_json(const SearchReport<S>& r) {
  Json out;
  out["target"] = std::string(to_string(r.target));
  out["space"] = search_space_to_json(r.space);
  out["scanned"] = r.scanned;
  out["holds"] = r.holds;
  out["not_applicable"] = r.not_applicable;
  out["counterexample_count"] = r.counterexample_count;
  Json ces = Json::array();
  for (const auto& [inst, verdict] : r.counterexamples) {
    Json ce = vector_set_to_json(inst);
    ce["verdict"] = verdict_to_json(verdict);
    ces.push_back(std::move(ce));
  }
  out["counterexamples"] = std::move(ces);
  if (r.sample_holds) {
    Json s = vector_set_to_json(r.sample_holds->first);
    s["verdict"] = verdict_to_json(r.sample_holds->second);
    out["sample_holds"] = std::move(s);
  } else {
    out["sample_holds"] = nullptr;
  }
  Json cells = Json::array();
  for (const auto& c : r.cells) {
    Json cj;
    cj["dims"] = c.dims;
    cj["n"] = c.n;
    cj["scanned"] = c.scanned;
    cj["holds"] = c.holds;
    cj["not_applicable"] = c.not_applicable;
    cj["counterexamples"] = c.counterexamples;
    cells.push_back(std::move(cj));
  }
  out["cells"] = std::move(cells);
  return out;
}

}  // namespace tensorlab

#endif  // TENSORLAB_JSON_IO_HPP
