#include <CLI11.hpp>
#include <ostream>

#include "stonework/cli.hpp"

namespace stonework::cli {

namespace {

const std::map<std::string, Space> kSpaces{{"interval", Space::Interval}, {"circle", Space::Circle}};

}  // namespace

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Boolean algebras, Stone spaces and Cech cohomology at finite stages", "stonework"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Print the report as JSON");

  std::string file, term, cylinders, space_text;
  std::size_t stage = 1, bound = 0, level = 0, depth = 0;

  auto* spectrum = app.add_subcommand("spectrum", "List the points of Sp(B) for a presentation file");
  spectrum->add_option("file", file)->required();
  auto* duality = app.add_subcommand("duality", "Check that B -> 2^Sp(B) is a bijection");
  duality->add_option("file", file)->required();
  auto* morphism = app.add_subcommand("morphism", "Analyze a morphism file: kernel, point map, factorization");
  morphism->add_option("file", file)->required();
  auto* llpo = app.add_subcommand("llpo", "Split B-infinity at a finite stage and decode the sides");
  llpo->add_option("--stage", stage)->required()->check(CLI::PositiveNumber);
  auto* wlpo = app.add_subcommand("wlpo", "Refute a candidate decider term over g0, g1, ...");
  wlpo->add_option("term", term)->required();
  auto* markov = app.add_subcommand("markov", "Least prefix of the relations that trivializes the algebra");
  markov->add_option("file", file)->required();
  markov->add_option("--bound", bound)->required();
  auto* separate = app.add_subcommand("separate", "Separate the closed sets given by F and G");
  separate->add_option("file", file)->required();
  auto* tower = app.add_subcommand("tower", "Spectrum tower of a countable presentation");
  tower->add_option("file", file)->required();
  auto* tower_depth = tower->add_option("--depth", depth);
  auto* cohomology = app.add_subcommand("cohomology", "H0 and H1 of the interval or circle at a level");
  cohomology->add_option("space", space_text)->required()->check(CLI::IsMember({"interval", "circle"}));
  cohomology->add_option("--level", level)->required();
  auto* image = app.add_subcommand("interval-image", "Image in [0,1] of a union of cylinders");
  image->add_option("--cylinders", cylinders, "Comma-separated bit strings")->required();
  auto* stabilize = app.add_subcommand("stabilize", "Cohomology along the tower and induced isomorphisms");
  stabilize->add_option("space", space_text)->required()->check(CLI::IsMember({"interval", "circle"}));
  stabilize->add_option("--depth", depth)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  Command cmd;
  auto* sub = app.get_subcommands().front();
  if (sub == spectrum) cmd = SpectrumCmd{file};
  else if (sub == duality) cmd = DualityCmd{file};
  else if (sub == morphism) cmd = MorphismCmd{file};
  else if (sub == llpo) cmd = LlpoCmd{stage};
  else if (sub == wlpo) cmd = WlpoCmd{term};
  else if (sub == markov) cmd = MarkovCmd{file, bound};
  else if (sub == separate) cmd = SeparateCmd{file};
  else if (sub == tower) cmd = TowerCmd{file, tower_depth->count() ? std::optional(depth) : std::nullopt};
  else if (sub == cohomology) cmd = CohomologyCmd{kSpaces.at(space_text), level};
  else if (sub == image) cmd = IntervalImageCmd{cylinders};
  else cmd = StabilizeCmd{kSpaces.at(space_text), depth};

  Outcome o = run(cmd);
  if (json)
    out << o.report.to_json().dump(2) << '\n';
  else
    out << o.report.render_text();
  if (o.report.result.contains("error")) err << "error: " << o.report.result["error"]["message"].get<std::string>() << '\n';
  return o.exit_code;
}

}  // namespace stonework::cli
