#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gpd/grading.hpp"
#include "gpd/landscape.hpp"
#include "gpd/module.hpp"
#include "gpd/stability.hpp"
#include "gpd/transport.hpp"

// Text formats. Lines are whitespace separated; '#' starts a comment.
//   barcode   : birth death [multiplicity]       (integers)
//   diagram   : birth death value                (reals; value may be negative)
//   grid      : one real per line, strictly increasing
//   landscape : k t h                            (levels separated by a blank line)
//   map chain : "field gf2|gf <p>|rational", "dims d0 .. dm", then for each
//               map a line "map" followed by d_{i+1} rows of d_i entries.
namespace gpd::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// m defaults to (largest death - 1), or 0 for an empty file.
Barcode parse_barcode(std::istream& in, std::optional<int> m = std::nullopt);
RealDiagram parse_diagram(std::istream& in);
Grid parse_grid(std::istream& in);
MapChain parse_mapchain(std::istream& in);

struct WriteOptions {
  /// Deaths equal to this coordinate are printed as "inf".
  std::optional<Rational> infinite_death;
};

void write_diagram(std::ostream& out, const RealDiagram& diagram, const WriteOptions& options = {});
/// Levels in ascending k, each introduced by "# k = <k>" and separated by a blank line.
void write_graded(std::ostream& out, const std::vector<RealDiagram>& levels, int first_k = 1,
                  const WriteOptions& options = {});
void write_landscape(std::ostream& out, const Landscape& landscape);
/// `samples` evenly spaced (k, t, lambda_k(t)) rows per level, for plotting.
void write_landscape_samples(std::ostream& out, const Landscape& landscape, int samples);

nlohmann::json to_json(const RealDiagram& diagram, const WriteOptions& options = {});
nlohmann::json to_json(const Landscape& landscape);
nlohmann::json to_json(const Coupling& coupling);
nlohmann::json to_json(const StabilityReport& report);
nlohmann::json to_json(const TriangleReport& report);
nlohmann::json number(const Rational& value);

}  // namespace gpd::io
