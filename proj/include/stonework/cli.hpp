#pragma once

// Concrete syntax for terms and presentations, command dispatch and the
// JSON/text reports shared by every subcommand.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "stonework/boolalg.hpp"
#include "stonework/profinite.hpp"

namespace stonework::cli {

using Json = nlohmann::ordered_json;

/// expr := expr "|" expr | expr "&" expr | "~" expr | "0" | "1" | ident | "(" expr ")"
/// with ~ binding tightest, then &, then |. Throws ParseError.
boolalg::Term parse_term(std::string_view text);

/// "gens: a b c" then "rels: t1, t2". Blank lines and '#' comments are
/// skipped. Throws ParseError, DuplicateGenerator or UnknownGenerator.
boolalg::Presentation parse_presentation(std::string_view text);

/// "src gens:", "src rels:", "dst gens:", "dst rels:" and "map: g0 -> t, ...".
boolalg::Morphism parse_morphism(std::string_view text);

struct SeparateInput {
  boolalg::Presentation presentation;
  std::vector<boolalg::Term> f;
  std::vector<boolalg::Term> g;
};

/// A presentation block plus "F: t, ..." and "G: t, ...".
SeparateInput parse_separate(std::string_view text);

struct TowerInput {
  profinite::CountablePresentation presentation;
  std::optional<std::size_t> depth;
};

/// A presentation block plus optional "depth: n" and
/// "family: none | pairwise-meet-zero".
TowerInput parse_tower(std::string_view text);

enum class Space { Interval, Circle };

struct SpectrumCmd { std::string file; };
struct DualityCmd { std::string file; };
struct MorphismCmd { std::string file; };
struct LlpoCmd { std::size_t stage = 1; };
struct WlpoCmd { std::string term; };
struct MarkovCmd { std::string file; std::size_t bound = 0; };
struct SeparateCmd { std::string file; };
struct TowerCmd { std::string file; std::optional<std::size_t> depth; };
struct CohomologyCmd { Space space = Space::Interval; std::size_t level = 0; };
struct IntervalImageCmd { std::string cylinders; };
struct StabilizeCmd { Space space = Space::Interval; std::size_t depth = 0; };

using Command = std::variant<SpectrumCmd, DualityCmd, MorphismCmd, LlpoCmd, WlpoCmd, MarkovCmd, SeparateCmd,
                             TowerCmd, CohomologyCmd, IntervalImageCmd, StabilizeCmd>;

/// Canonical echo of a command, e.g. "cohomology interval --level 4".
std::string command_line(const Command& c);

struct Report {
  std::string command;
  std::string module;
  std::string operation;
  std::string input_digest;
  /// The computed data, or {"error": {"type", "message"}}.
  Json result;

  Json to_json() const;
  static Report from_json(const Json& j);
  /// Text rendering of the same data as to_json().
  std::string render_text() const;
  friend bool operator==(const Report&, const Report&) = default;
};

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kPropertyFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kCapExceeded = 3;
}  // namespace exit_code

struct Outcome {
  int exit_code = exit_code::kOk;
  Report report;
};

/// Never throws for library errors; they become exit codes and error reports.
Outcome run(const Command& c);

/// Full command-line entry point.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace stonework::cli
