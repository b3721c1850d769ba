#include "tensorlab/json_io.hpp"

#include <fstream>
#include <sstream>

namespace tensorlab {

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path.string() + "'", path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, e.what(), "byte " + std::to_string(e.byte));
  }
}

Json field_to_json(const FieldSpec& f) {
  Json out;
  if (f.kind == FieldSpec::Kind::rationals) {
    out["kind"] = "rationals";
  } else {
    out["kind"] = "prime_field";
    out["p"] = f.p;
  }
  return out;
}

FieldSpec field_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("field")) throw Error(Errc::SchemaError, "missing \"field\"", "/field");
  const auto& f = doc["field"];
  if (f.is_string()) return FieldSpec::parse(f.get<std::string>());
  if (!f.is_object() || !f.contains("kind") || !f["kind"].is_string())
    throw Error(Errc::SchemaError, "\"field\" needs a \"kind\"", "/field/kind");
  const auto kind = f["kind"].get<std::string>();
  if (kind == "rationals") return FieldSpec::rationals();
  if (kind != "prime_field") throw Error(Errc::SchemaError, "unknown field kind '" + kind + "'", "/field/kind");
  if (!f.contains("p") || !f["p"].is_number_unsigned())
    throw Error(Errc::SchemaError, "prime_field needs an integer \"p\"", "/field/p");
  try {
    return FieldSpec::prime(f["p"].get<unsigned>());
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), "/field/p");
  }
}

std::vector<std::size_t> dims_from_json(const Json& doc) {
  if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].empty())
    throw Error(Errc::SchemaError, "expected a nonempty \"dims\" list", "/dims");
  std::vector<std::size_t> dims;
  for (std::size_t j = 0; j < doc["dims"].size(); ++j) {
    const auto& d = doc["dims"][j];
    if (!d.is_number_integer() || d.get<long long>() < 1)
      throw Error(Errc::SchemaError, "dims must be positive integers", "/dims/" + std::to_string(j));
    dims.push_back(d.get<std::size_t>());
  }
  return dims;
}

Json index_set_to_json(const IndexSet& s) {
  Json out = Json::array();
  for (auto a : s) out.push_back(a + 1);
  return out;
}

IndexSet index_set_from_json(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) throw Error(Errc::SchemaError, "expected a list of 1-based indices", where);
  IndexSet out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) throw Error(Errc::SchemaError, "indices must be integers", where + "/" + std::to_string(i));
    const auto v = j[i].get<long long>();
    if (v < 1 || static_cast<std::size_t>(v) > n)
      throw Error(Errc::IndexOutOfRange, "index " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]",
                  where + "/" + std::to_string(i));
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw Error(Errc::SchemaError, "repeated index", where);
  return out;
}

Json partition_to_json(const Partition& p) {
  Json blocks = Json::array();
  for (const auto& b : p.blocks) blocks.push_back(index_set_to_json(b));
  return blocks;
}

Json chain_to_json(const Chain& c) {
  Json out = Json::array();
  for (const auto& tb : c.sequence) {
    Json e;
    e["origin"] = tb.origin == Origin::S ? "S" : "T";
    e["block"] = index_set_to_json(tb.block);
    out.push_back(std::move(e));
  }
  return out;
}

Json chain_problem_to_json(const ChainProblem& cp) {
  Json out;
  out["n"] = cp.ground;
  Json s = Json::array(), t = Json::array();
  for (const auto& b : cp.s_blocks) s.push_back(index_set_to_json(b));
  for (const auto& b : cp.t_blocks) t.push_back(index_set_to_json(b));
  out["S"] = std::move(s);
  out["T"] = std::move(t);
  return out;
}

ChainProblem chain_problem_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 1)
    throw Error(Errc::SchemaError, "chain problems need a positive \"n\"", "/n");
  ChainProblem cp;
  cp.ground = doc["n"].get<std::size_t>();
  if (cp.ground > kMaxChainGround) throw Error(Errc::InvalidArgument, "n is limited to 64", "/n");
  for (const char* key : {"S", "T"}) {
    if (!doc.contains(key) || !doc[key].is_array())
      throw Error(Errc::SchemaError, std::string("expected a list of blocks \"") + key + "\"", std::string("/") + key);
    auto& family = std::string(key) == "S" ? cp.s_blocks : cp.t_blocks;
    for (std::size_t i = 0; i < doc[key].size(); ++i) {
      const auto where = std::string("/") + key + "/" + std::to_string(i);
      const auto& b = doc[key][i];
      // Duplicates inside one block are an overlap, reported as NotAPartition.
      if (!b.is_array()) throw Error(Errc::SchemaError, "expected a list of 1-based indices", where);
      IndexSet block;
      for (std::size_t k = 0; k < b.size(); ++k) {
        if (!b[k].is_number_integer()) throw Error(Errc::SchemaError, "indices must be integers", where);
        const auto v = b[k].get<long long>();
        if (v < 1 || static_cast<std::size_t>(v) > cp.ground)
          throw Error(Errc::NotAPartition, "index " + std::to_string(v) + " outside [1, n]", where);
        block.push_back(static_cast<std::size_t>(v - 1));
      }
      std::sort(block.begin(), block.end());
      if (std::adjacent_find(block.begin(), block.end()) != block.end())
        throw Error(Errc::NotAPartition, "repeated index inside a block", where);
      family.push_back(std::move(block));
    }
  }
  return cp;
}

Json lemma_violation_to_json(const LemmaViolation& v) {
  Json out;
  out["theta_S"] = index_set_to_json(v.theta_s);
  out["theta_T"] = index_set_to_json(v.theta_t);
  out["gamma"] = index_set_to_json(v.gamma);
  return out;
}

Json verdict_to_json(const Verdict& v) {
  Json out;
  out["status"] = std::string(to_string(v.status));
  out["n"] = v.n;
  out["m"] = v.m;
  out["target"] = std::string(to_string(v.target));
  Json premises;
  for (const auto& p : v.premises) premises[p.name] = p.held;
  out["premises"] = std::move(premises);
  out["conclusion"] = v.conclusion;
  if (v.rank) out["rank"] = *v.rank;
  if (v.witness) out["witness"] = index_set_to_json(*v.witness);
  return out;
}

Json certificate_to_json(const UniquenessCertificate& c) {
  Json out;
  out["n"] = c.n;
  out["m"] = c.m;
  out["kruskal_ranks"] = c.kruskal_ranks;
  out["inequality_lhs"] = c.inequality_lhs;
  out["inequality_rhs"] = c.inequality_rhs;
  out["certified"] = c.certified;
  if (!c.reason.empty()) out["reason"] = c.reason;
  return out;
}

Json general_position_to_json(const GeneralPositionReport& r) {
  Json out;
  out["requested"] = r.requested;
  out["holds"] = r.holds;
  if (r.witness) {
    Json w;
    w["mode"] = r.witness->mode + 1;
    w["subset"] = index_set_to_json(r.witness->subset);
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json gamma_prediction_to_json(const GammaRankPrediction& p) {
  Json out;
  if (!p.applicable) {
    out["prediction"] = "NotApplicable";
  } else if (p.rank_is_target) {
    out["prediction"] = "rank_equals_target";
    out["predicted_rank"] = p.target;
  } else {
    out["prediction"] = "rank_differs_from_target";
  }
  out["target"] = p.target;
  out["gamma_size"] = p.gamma_size;
  out["lhs"] = p.lhs;
  out["rhs"] = p.rhs;
  return out;
}

Json search_space_to_json(const SearchSpace& s) {
  Json out;
  out["field"] = field_to_json(s.field);
  if (s.dims) {
    out["dims"] = *s.dims;
  } else {
    out["mode_dim"] = s.mode_dim;
    out["m_range"] = {s.m_min, s.m_max};
  }
  out["n_range"] = {s.n_min, s.n_max};
  out["relabel_symmetry"] = s.relabel_symmetry;
  return out;
}

}  // namespace tensorlab
