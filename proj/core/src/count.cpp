#include "flowfilter/count.hpp"

#include <stdexcept>

#include "flowfilter/errors.hpp"

namespace flowfilter {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::kParse: return "ParseError";
    case Errc::kDuplicateEdge: return "DuplicateEdge";
    case Errc::kSelfLoop: return "SelfLoop";
    case Errc::kEmptyGraph: return "EmptyGraph";
    case Errc::kUnknownNode: return "UnknownNode";
    case Errc::kCycleDetected: return "CycleDetected";
    case Errc::kNoSource: return "NoSource";
    case Errc::kMultipleSources: return "MultipleSources";
    case Errc::kAlreadyFilter: return "AlreadyFilter";
    case Errc::kNotACTree: return "NotACTree";
    case Errc::kRootNotFound: return "RootNotFound";
    case Errc::kBudgetExceeded: return "BudgetExceeded";
    case Errc::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string describe_cycle(const std::vector<std::string>& cycle) {
  std::string s = "graph contains a directed cycle:";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    s += i == 0 ? " " : " -> ";
    s += cycle[i];
  }
  return s;
}

}  // namespace

CycleError::CycleError(std::vector<std::string> cycle)
    : Error(Errc::kCycleDetected, describe_cycle(cycle)), cycle_(std::move(cycle)) {}

std::string to_string(const Count& c) { return c.str(); }

std::string Ratio::to_decimal(int digits) const {
  if (den == 0) throw std::domain_error("Ratio with zero denominator");
  Count scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half up: floor((2*num*scale + den) / (2*den))
  Count scaled = (2 * num * scale + den) / (2 * den);
  Count whole = scaled / scale;
  Count frac = scaled % scale;
  std::string out = whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    out += '.';
    out.append(static_cast<std::size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

double Ratio::to_double() const {
  if (den == 0) throw std::domain_error("Ratio with zero denominator");
  // Scale down both terms so the conversion never overflows a double.
  Count n = num;
  Count d = den;
  while (d > Count(1) << 1000) {
    n >>= 64;
    d >>= 64;
  }
  return n.convert_to<double>() / d.convert_to<double>();
}

}  // namespace flowfilter
