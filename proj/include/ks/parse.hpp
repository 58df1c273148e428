#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ks/generators.hpp"
#include "ks/phi.hpp"
#include "ks/series.hpp"

namespace ks {

// Complex literals: "2", "-0.5", "i", "-i", "0.4+0.1i", "1+0i", "3e-1-2i".
Complex parse_complex(std::string_view text);
std::vector<double> parse_real_list(std::string_view text);

// "halfplane" | "gamma:<g>" | "poly:<B1>,<B2>,..."
MaMindaFunction parse_phi(std::string_view spec, int order = kDefaultOrder, bool attested = false);
// "atoms:<x>@<lambda>,<x>@<lambda>,..."
StarlikeAtomic parse_starlike(std::string_view spec, int order = kDefaultOrder);
// "mono:<k>[,<theta>]" | "rot:<rho>,<theta>" | "blaschke:<a1>[,<a2>,...]"
SchwarzMap parse_schwarz(std::string_view spec, int order = kDefaultOrder);

// Canonical spec strings; parsing them reproduces the value exactly.
std::string format_real(double x);
std::string format_complex(Complex z);
std::string to_spec(const MaMindaFunction& phi);
std::string to_spec(const StarlikeAtomic& g);
std::string to_spec(const SchwarzMap& w);

// Coefficient files: one "re im" pair per line, index 0 first. Blank lines and
// lines starting with '#' are skipped.
PowerSeries read_coefficients(std::istream& in);
PowerSeries read_coefficients_file(const std::string& path);
void write_coefficients(std::ostream& out, const PowerSeries& s);

}  // namespace ks
