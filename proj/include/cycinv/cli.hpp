#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cycinv {

enum class Command { Gens, Relations, Betti, EdgeBetti, Sweep, Fuzz, HilbertCheck };
enum class OutputFormat { Text, Json };

struct RunConfig {
  Command command = Command::Gens;
  std::int64_t n = 0;
  std::vector<std::int64_t> weights;
  std::optional<int> m;
  std::optional<int> s;
  std::optional<std::string> graph_file;
  std::int64_t field_char = 0;
  std::optional<int> max_degree;
  OutputFormat format = OutputFormat::Text;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  // sweep
  int m_min = 3;
  int m_max = 8;
  // fuzz
  int count_2d = 100;
  int count_3d = 50;
  std::int64_t n_max_2d = 30;
  std::int64_t n_max_3d = 20;
};

Command parse_command(const std::string& name);
std::string to_string(Command c);

/// Throws ValidationError if a required field is missing or out of range.
void validate(const RunConfig& config);

/// Executes the command. Returns 0 on success, 1 if any check failed, 2 on a
/// validation error (one diagnostic line on `err`, nothing on `out`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parallelism override from CYCINV_THREADS, if set and valid.
std::optional<unsigned> threads_from_env();

}  // namespace cycinv
