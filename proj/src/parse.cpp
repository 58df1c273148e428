#include "ks/parse.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ks/error.hpp"

namespace ks {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

double parse_real(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw InputError("expected a number, got an empty string");
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw InputError("malformed number '" + s + "'");
  }
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

// "kind:args" -> {kind, args}; args empty when there is no colon.
std::pair<std::string, std::string> head(std::string_view spec) {
  const std::string s = trim(spec);
  const auto colon = s.find(':');
  if (colon == std::string::npos) return {s, ""};
  return {s.substr(0, colon), s.substr(colon + 1)};
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string s = trim(text);
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) throw InputError("malformed complex number '" + s + "'");
  }
  if (s.empty()) throw InputError("expected a complex number, got an empty string");
  if (s.back() != 'i') return {parse_real(s), 0.0};
  s.pop_back();
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split_at = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  const std::string re_part = split_at == std::string::npos ? "" : s.substr(0, split_at);
  const std::string im_part = split_at == std::string::npos ? s : s.substr(split_at);
  double im;
  if (im_part.empty() || im_part == "+") {
    im = 1.0;
  } else if (im_part == "-") {
    im = -1.0;
  } else {
    im = parse_real(im_part);
  }
  return {re_part.empty() ? 0.0 : parse_real(re_part), im};
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_real(item));
  return out;
}

MaMindaFunction parse_phi(std::string_view spec, int order, bool attested) {
  const auto [kind, args] = head(spec);
  if (kind == "halfplane" && args.empty()) return MaMindaFunction::halfplane(order);
  if (kind == "gamma") return MaMindaFunction::order_gamma(parse_real(args), order);
  if (kind == "poly") {
    std::vector<Complex> b;
    for (const auto& item : split(args, ',')) b.push_back(parse_complex(item));
    return MaMindaFunction::polynomial(std::move(b), attested, order);
  }
  throw InputError("unknown phi spec '" + std::string(spec) + "' (halfplane | gamma:<g> | poly:<B1>,...)");
}

StarlikeAtomic parse_starlike(std::string_view spec, int order) {
  const auto [kind, args] = head(spec);
  if (kind != "atoms" || args.empty()) {
    throw InputError("unknown g spec '" + std::string(spec) + "' (atoms:<x>@<lambda>,...)");
  }
  std::vector<Atom> atoms;
  for (const auto& item : split(args, ',')) {
    const auto at = item.find('@');
    if (at == std::string::npos) throw InputError("atom '" + item + "' lacks '@<weight>'");
    atoms.push_back({parse_complex(item.substr(0, at)), parse_real(item.substr(at + 1))});
  }
  return StarlikeAtomic(std::move(atoms), order);
}

SchwarzMap parse_schwarz(std::string_view spec, int order) {
  const auto [kind, args] = head(spec);
  if (kind == "mono") {
    const auto v = parse_real_list(args);
    if (v.empty() || v.size() > 2 || v[0] != std::floor(v[0])) {
      throw InputError("mono expects <k>[,<theta>] with integer k");
    }
    return SchwarzMap::monomial(static_cast<int>(v[0]), v.size() == 2 ? v[1] : 0.0, order);
  }
  if (kind == "rot") {
    const auto v = parse_real_list(args);
    if (v.size() != 2) throw InputError("rot expects <rho>,<theta>");
    return SchwarzMap::scaled(v[0], v[1], order);
  }
  if (kind == "blaschke") {
    std::vector<Complex> zeros;
    for (const auto& item : split(args, ',')) zeros.push_back(parse_complex(item));
    return SchwarzMap::blaschke(std::move(zeros), order);
  }
  throw InputError("unknown w spec '" + std::string(spec) + "' (mono:<k> | rot:<rho>,<theta> | blaschke:<a>,...)");
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(Complex z) {
  std::string s = format_real(z.real());
  if (z.imag() == 0.0 && !std::signbit(z.imag())) return s;
  if (!std::signbit(z.imag())) s += '+';
  return s + format_real(z.imag()) + "i";
}

std::string to_spec(const MaMindaFunction& phi) {
  switch (phi.kind()) {
    case PhiKind::halfplane:
      return "halfplane";
    case PhiKind::order_gamma:
      return "gamma:" + format_real(phi.gamma());
    case PhiKind::polynomial: {
      std::string s = "poly:";
      for (std::size_t k = 0; k < phi.poly_coeffs().size(); ++k) {
        if (k) s += ',';
        s += format_complex(phi.poly_coeffs()[k]);
      }
      return s;
    }
  }
  return {};
}

std::string to_spec(const StarlikeAtomic& g) {
  std::string s = "atoms:";
  for (std::size_t k = 0; k < g.atoms().size(); ++k) {
    if (k) s += ',';
    s += format_complex(g.atoms()[k].x) + "@" + format_real(g.atoms()[k].weight);
  }
  return s;
}

std::string to_spec(const SchwarzMap& w) {
  switch (w.kind()) {
    case SchwarzKind::monomial:
      return "mono:" + std::to_string(w.power()) + "," + format_real(w.theta());
    case SchwarzKind::scaled:
      return "rot:" + format_real(w.rho()) + "," + format_real(w.theta());
    case SchwarzKind::blaschke: {
      std::string s = "blaschke:";
      for (std::size_t k = 0; k < w.zeros().size(); ++k) {
        if (k) s += ',';
        s += format_complex(w.zeros()[k]);
      }
      return s;
    }
  }
  return {};
}

PowerSeries read_coefficients(std::istream& in) {
  std::vector<Complex> c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream ls(t);
    std::string re, im, extra;
    if (!(ls >> re >> im) || (ls >> extra)) {
      throw InputError("coefficient line " + std::to_string(lineno) + ": expected 're im'");
    }
    c.emplace_back(parse_real(re), parse_real(im));
  }
  if (c.empty()) throw InputError("coefficient file is empty");
  return PowerSeries(std::move(c));
}

PowerSeries read_coefficients_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open coefficient file '" + path + "'");
  return read_coefficients(in);
}

void write_coefficients(std::ostream& out, const PowerSeries& s) {
  for (const Complex c : s.coeffs()) out << format_real(c.real()) << ' ' << format_real(c.imag()) << '\n';
}

}  // namespace ks
