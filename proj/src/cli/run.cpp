#include <fstream>
#include <sstream>

#include "stonework/cli.hpp"
#include "stonework/error.hpp"
#include "stonework/interval.hpp"
#include "stonework/zhomology.hpp"

namespace stonework::cli {

namespace b = boolalg;
namespace z = zhomology;

namespace {

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

std::string space_name(Space s) { return s == Space::Interval ? "interval" : "circle"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string bits(const std::vector<bool>& v) {
  std::string s;
  for (bool x : v) s.push_back(x ? '1' : '0');
  return s;
}

Json points(const b::FinBoolAlg& a) {
  Json out = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a.point_string(i));
  return out;
}

Json terms(std::span<const b::Term> ts) {
  Json out = Json::array();
  for (const auto& t : ts) out.push_back(t.to_string());
  return out;
}

Json integer(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

Json invariants(const z::AbInvariants& a) {
  Json torsion = Json::array();
  for (const Int& t : a.torsion) torsion.push_back(integer(t));
  return Json{{"rank", a.rank}, {"torsion", torsion}, {"group", a.to_string()}};
}

Json cohomology_json(const z::CohomologyResult& r) {
  Json j;
  j["level"] = r.level;
  j["dims"] = r.dims;
  j["h0"] = invariants(r.homology.h0);
  j["h1"] = invariants(r.homology.h1);
  if (r.homology.h0_reduced) j["h0_reduced"] = invariants(*r.homology.h0_reduced);
  j["exact"] = r.homology.exact;
  j["warnings"] = r.homology.warnings;
  return j;
}

Json union_json(const interval::IntervalUnion& u) {
  Json parts = Json::array();
  for (const auto& p : u.parts()) parts.push_back(Json::array({p.lo.to_string(), p.hi.to_string()}));
  return Json{{"kind", u.kind() == interval::IntervalUnion::Kind::Closed ? "closed" : "open_in_I"},
              {"parts", parts},
              {"text", u.to_string()}};
}

struct Computed {
  std::string input;
  Json result;
  bool ok = true;
};

Computed compute(const SpectrumCmd& c) {
  std::string text = read_file(c.file);
  b::Presentation p = parse_presentation(text);
  b::FinBoolAlg a = b::spectrum(p);
  Json r;
  r["generators"] = p.gens();
  r["relations"] = terms(p.rels());
  r["points"] = points(a);
  r["count"] = a.size();
  return {text, r};
}

Computed compute(const DualityCmd& c) {
  std::string text = read_file(c.file);
  b::DualityReport d = b::check_duality(parse_presentation(text));
  Json r;
  r["mode"] = d.mode == b::DualityReport::Mode::Exhaustive ? "exhaustive" : "structural";
  r["generators"] = d.generators;
  r["points"] = d.points;
  r["element_count_log2"] = d.element_count_log2;
  r["elements"] = d.elements ? Json(*d.elements) : Json(nullptr);
  r["injective"] = d.injective;
  r["surjective"] = d.surjective;
  r["bijective"] = d.bijective();
  return {text, r, d.bijective()};
}

Computed compute(const MorphismCmd& c) {
  std::string text = read_file(c.file);
  b::Morphism m = parse_morphism(text);
  b::MorphismReport rep = b::analyze_morphism(m);
  b::EpiMonoFactorization f = b::epi_mono_factor(m);
  Json r;
  r["source_points"] = points(b::spectrum(m.src));
  r["target_points"] = points(b::spectrum(m.dst));
  r["point_map"] = rep.point_map;
  r["point_map_surjective"] = rep.point_map_surjective;
  r["injective"] = rep.injective;
  r["kernel_top"] = rep.kernel_top.to_string();
  r["kernel_log2_size"] = rep.kernel_log2_size;
  Json kernel = Json::array();
  for (const auto& k : rep.kernel_elements) kernel.push_back(k.to_string());
  r["kernel_elements"] = kernel;
  r["axiom2_consistent"] = rep.axiom2_consistent;
  r["factorization"] = Json{{"quotient_relations", terms(f.epi.dst.rels())}, {"middle_points", points(f.middle)}};
  return {text, r, rep.axiom2_consistent};
}

Computed compute(const LlpoCmd& c) {
  b::LlpoReport rep = b::llpo_split(c.stage);
  b::FinBoolAlg half = b::spectrum(b::binfty(c.stage));
  Json decode = Json::array();
  for (const auto& d : rep.decode) {
    decode.push_back(Json{{"alpha", rep.source_spectrum.point_string(d.alpha)},
                          {"side", d.side == b::Side::Left ? "left" : "right"},
                          {"beta", half.point_string(d.beta)},
                          {"round_trip", d.round_trip},
                          {"llpo_identity", d.llpo_identity}});
  }
  Json r;
  r["stage"] = rep.stage;
  r["injective"] = rep.injective();
  r["surjective"] = rep.surjective();
  r["source_points"] = rep.source_spectrum.size();
  r["product_points"] = rep.product_spectrum.size();
  r["decode"] = decode;
  r["all_ok"] = rep.all_ok();
  return {"", r, rep.all_ok()};
}

Computed compute(const WlpoCmd& c) {
  b::Term t = parse_term(c.term);
  b::WlpoReport w = b::wlpo_counterexample(t);
  bool refuted = w.value_beta || w.value_beta == w.value_gamma;
  Json r;
  r["candidate"] = t.to_string();
  r["k"] = w.k ? Json(*w.k) : Json(nullptr);
  r["beta"] = bits(w.beta);
  r["gamma"] = bits(w.gamma);
  r["value_beta"] = w.value_beta;
  r["value_gamma"] = w.value_gamma;
  r["verdict"] = w.verdict == b::WlpoReport::Verdict::FailsOnBeta ? "fails_on_beta" : "fails_on_gamma";
  r["refuted"] = refuted;
  return {c.term, r, refuted};
}

Computed compute(const MarkovCmd& c) {
  std::string text = read_file(c.file);
  b::Presentation p = parse_presentation(text);
  auto k = b::minimal_join_witness(b::free_algebra(p.gens()), p.rels(), c.bound);
  Json r;
  r["bound"] = c.bound;
  r["relations"] = p.rels().size();
  r["witness"] = k ? Json(*k) : Json(nullptr);
  return {text, r};
}

Computed compute(const SeparateCmd& c) {
  std::string text = read_file(c.file);
  SeparateInput in = parse_separate(text);
  b::Separation s = b::separate_closed(in.presentation, in.f, in.g);
  b::FinBoolAlg a = b::spectrum(in.presentation);
  b::ElementVec f = b::closed_set(a, in.f);
  b::ElementVec g = b::closed_set(a, in.g);
  bool f_inside = f.is_subset_of(s.decider);
  bool g_outside = (g & s.decider).none();
  Json r;
  r["points"] = points(a);
  r["F"] = f.to_string();
  r["G"] = g.to_string();
  r["decider"] = s.decider.to_string();
  r["decider_term"] = b::realize(s.decider, a).to_string();
  r["f_used"] = s.f_used;
  r["g_used"] = s.g_used;
  r["f_inside"] = f_inside;
  r["g_outside"] = g_outside;
  return {text, r, f_inside && g_outside};
}

Computed compute(const TowerCmd& c) {
  std::string text = read_file(c.file);
  TowerInput in = parse_tower(text);
  std::optional<std::size_t> depth = c.depth ? c.depth : in.depth;
  if (!depth) throw Error("no depth given: pass --depth or add a 'depth:' line");
  profinite::AlgebraTower t = profinite::truncation_tower(in.presentation, *depth);
  profinite::SeqDiagram d = profinite::spectrum_tower(t);
  d.validate();
  Json levels = Json::array();
  for (std::size_t n = 0; n <= *depth; ++n) {
    Json l;
    l["level"] = n;
    l["generators"] = t.presentations[n].gens();
    l["relations"] = terms(t.presentations[n].rels());
    l["points"] = points(t.levels[n]);
    if (n > 0) l["transition"] = d.transitions[n - 1];
    levels.push_back(l);
  }
  Json r;
  r["depth"] = *depth;
  r["sizes"] = d.sizes;
  r["levels"] = levels;
  return {text, r};
}

Computed compute(const CohomologyCmd& c) {
  z::CohomologyResult res =
      c.space == Space::Interval ? z::interval_cohomology(c.level) : z::circle_cohomology(c.level);
  Json r = cohomology_json(res);
  r["space"] = space_name(c.space);
  return {"", r};
}

Computed compute(const IntervalImageCmd& c) {
  std::vector<interval::BitWord> words;
  std::string_view rest = c.cylinders;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view w = rest.substr(0, comma);
    while (!w.empty() && w.front() == ' ') w.remove_prefix(1);
    while (!w.empty() && w.back() == ' ') w.remove_suffix(1);
    words.push_back(interval::BitWord::parse(w));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  interval::IntervalUnion image = interval::decidable_image(words);
  Json cyl = Json::array();
  for (const auto& w : words) cyl.push_back(w.to_string());
  Json r;
  r["cylinders"] = cyl;
  r["image"] = union_json(image);
  r["complement"] = union_json(interval::complement_closed_union(image));
  r["normalized"] = image.is_normalized();
  return {c.cylinders, r, image.is_normalized()};
}

Computed compute(const StabilizeCmd& c) {
  profinite::RelGraphTower t =
      c.space == Space::Interval ? interval::interval_tower(c.depth) : interval::circle_tower(c.depth);
  z::StabilizationReport rep = z::stabilization_report(t, c.depth);
  Json levels = Json::array();
  for (const auto& l : rep.levels) levels.push_back(cohomology_json(l));
  Json transitions = Json::array();
  for (std::size_t n = 0; n < rep.transitions.size(); ++n)
    transitions.push_back(
        Json{{"from", n}, {"to", n + 1}, {"h0_iso", rep.transitions[n].h0}, {"h1_iso", rep.transitions[n].h1}});
  Json r;
  r["space"] = space_name(c.space);
  r["depth"] = c.depth;
  r["levels"] = levels;
  r["transitions"] = transitions;
  return {"", r};
}

std::pair<std::string, std::string> naming(const Command& c) {
  return std::visit(
      Overload{[](const SpectrumCmd&) { return std::pair<std::string, std::string>{"boolalg", "spectrum"}; },
               [](const DualityCmd&) { return std::pair<std::string, std::string>{"boolalg", "check_duality"}; },
               [](const MorphismCmd&) { return std::pair<std::string, std::string>{"boolalg", "analyze_morphism"}; },
               [](const LlpoCmd&) { return std::pair<std::string, std::string>{"boolalg", "llpo_split"}; },
               [](const WlpoCmd&) { return std::pair<std::string, std::string>{"boolalg", "wlpo_counterexample"}; },
               [](const MarkovCmd&) { return std::pair<std::string, std::string>{"boolalg", "minimal_join_witness"}; },
               [](const SeparateCmd&) { return std::pair<std::string, std::string>{"boolalg", "separate_closed"}; },
               [](const TowerCmd&) { return std::pair<std::string, std::string>{"profinite", "spectrum_tower"}; },
               [](const CohomologyCmd& x) {
                 return std::pair<std::string, std::string>{"zhomology", space_name(x.space) + "_cohomology"};
               },
               [](const IntervalImageCmd&) { return std::pair<std::string, std::string>{"interval", "decidable_image"}; },
               [](const StabilizeCmd&) {
                 return std::pair<std::string, std::string>{"zhomology", "stabilization_report"};
               }},
      c);
}

Json error_json(const char* type, const std::exception& e) {
  return Json{{"error", Json{{"type", type}, {"message", e.what()}}}};
}

}  // namespace

std::string command_line(const Command& c) {
  return std::visit(
      Overload{[](const SpectrumCmd& x) { return "spectrum " + x.file; },
               [](const DualityCmd& x) { return "duality " + x.file; },
               [](const MorphismCmd& x) { return "morphism " + x.file; },
               [](const LlpoCmd& x) { return "llpo --stage " + std::to_string(x.stage); },
               [](const WlpoCmd& x) { return "wlpo '" + x.term + "'"; },
               [](const MarkovCmd& x) { return "markov " + x.file + " --bound " + std::to_string(x.bound); },
               [](const SeparateCmd& x) { return "separate " + x.file; },
               [](const TowerCmd& x) {
                 return "tower " + x.file + (x.depth ? " --depth " + std::to_string(*x.depth) : "");
               },
               [](const CohomologyCmd& x) {
                 return "cohomology " + space_name(x.space) + " --level " + std::to_string(x.level);
               },
               [](const IntervalImageCmd& x) { return "interval-image --cylinders '" + x.cylinders + "'"; },
               [](const StabilizeCmd& x) {
                 return "stabilize " + space_name(x.space) + " --depth " + std::to_string(x.depth);
               }},
      c);
}

Outcome run(const Command& c) {
  Outcome out;
  out.report.command = command_line(c);
  std::tie(out.report.module, out.report.operation) = naming(c);
  out.report.input_digest = fnv1a_hex(out.report.command);
  try {
    Computed r = std::visit([](const auto& x) { return compute(x); }, c);
    out.report.input_digest = fnv1a_hex(out.report.command + "\n" + r.input);
    out.report.result = std::move(r.result);
    out.exit_code = r.ok ? exit_code::kOk : exit_code::kPropertyFailed;
  } catch (const CapExceeded& e) {
    out.report.result = error_json("CapExceeded", e);
    out.exit_code = exit_code::kCapExceeded;
  } catch (const ParseError& e) {
    out.report.result = error_json("ParseError", e);
    out.exit_code = exit_code::kUsage;
  } catch (const InvariantViolated& e) {
    out.report.result = error_json("InvariantViolated", e);
    out.exit_code = exit_code::kPropertyFailed;
  } catch (const SquareNotCommuting& e) {
    out.report.result = error_json("SquareNotCommuting", e);
    out.exit_code = exit_code::kPropertyFailed;
  } catch (const RelationNotPreserved& e) {
    out.report.result = error_json("RelationNotPreserved", e);
    out.exit_code = exit_code::kPropertyFailed;
  } catch (const UnknownGenerator& e) {
    out.report.result = error_json("UnknownGenerator", e);
    out.exit_code = exit_code::kUsage;
  } catch (const DuplicateGenerator& e) {
    out.report.result = error_json("DuplicateGenerator", e);
    out.exit_code = exit_code::kUsage;
  } catch (const RelationNotKilled& e) {
    out.report.result = error_json("RelationNotKilled", e);
    out.exit_code = exit_code::kUsage;
  } catch (const NotDisjoint& e) {
    out.report.result = error_json("NotDisjoint", e);
    out.exit_code = exit_code::kUsage;
  } catch (const Error& e) {
    out.report.result = error_json("Error", e);
    out.exit_code = exit_code::kUsage;
  }
  return out;
}

}  // namespace stonework::cli
