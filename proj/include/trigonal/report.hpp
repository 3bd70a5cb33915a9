#pragma once

// Rendering of tables and verification results as text, JSON or CSV.  Output is
// deterministic for fixed inputs.

#include "trigonal/hurwitz.hpp"
#include "trigonal/potentials.hpp"

#include <string>
#include <string_view>

namespace trigonal {

enum class Format { Text, Json, Csv };

/// "text", "json" or "csv".  Throws InvalidArgument otherwise.
Format parse_format(std::string_view name);

struct Rendered {
  std::string body;
  bool all_pass = true;
};

Rendered render_table(const HodgeTable& table, Format format);
/// Components of one genus; for g >= 4 the E-system is re-solved to report the closure check.
Rendered render_components(const HodgeTable& table, int genus, Format format);
Rendered render_recursions(const HodgeTable& table, Format format);
/// theta_0 - theta_1 to total degree `order`, plus the factored form up to degree min(order, 10).
Rendered render_theta(int order, Format format);
Rendered render_crc(const CrcReport& report, Format format);
Rendered render_localization(Format format);
Rendered render_duval(int n, Format format);

}  // namespace trigonal
