#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

namespace rfg {

// One exit code per error class; anything unrecognized maps to 70.
enum class ExitCode : int {
  Ok = 0,
  Input = 2,
  Domain = 3,
  Resource = 4,
  Unsupported = 5,
  SearchExhausted = 6,
  Membership = 7,
  Construction = 8,
  Internal = 9,
  Unknown = 70,
};

// Everything a batch run needs. Flags fill this in; a key=value config file
// supplies defaults and flags override it.
struct RunConfig {
  std::string subcommand;
  std::string presentation_path;        // --pres
  std::string target_class = "ALL";     // --class
  long order_limit = 60;                // --limit
  unsigned radius = 3;                  // --radius
  long k_max = 3;                       // --kmax
  std::string format = "table";         // --format: csv, json, or table
  std::size_t ball_budget = 1'000'000;  // --ball-budget
  std::size_t scan_budget = 1'000'000;  // --scan-budget
  std::size_t hom_budget = 10'000'000;  // --hom-budget
  std::size_t jobs = 1;                 // --jobs

  std::string word;        // --word: detect / experiment probe
  std::string word0;       // --word0: experiment base element
  long j_max = 4;          // --jmax
  std::string generators;  // --gens: comma-separated words (growth metric)
  std::string members;     // --words: comma-separated words (certify T set)
  std::string family;      // --family: atlas family, letter or full "C(4,3)"
  long family_n = 0;       // --n
  long family_q = 0;       // --q
  std::string target;      // --target: induce quotient group name
  std::string images;      // --images: ';'-separated generator images
  std::string base;        // --base: ';'-separated base matrices
  long base_q = 0;         // --base-q: field of the base matrices

  unsigned long seed = 0;  // --seed: reserved; everything is deterministic
};

// Executes one subcommand and writes the artifact to out. Failures write a
// one-line JSON error record to err and return the class's exit code;
// output is byte-identical for a fixed config, whatever the jobs value.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Flag front end over run(); also handles --help and --config.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rfg
