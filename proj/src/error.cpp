#include "sesq/error.hpp"

#include <algorithm>

#include "sesq/report.hpp"

namespace sesq {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::not_composable: return "NotComposable";
    case Errc::no_pullback: return "NoPullback";
    case Errc::cone_mismatch: return "ConeMismatch";
    case Errc::missing_entry: return "MissingEntry";
    case Errc::not_vertically_composable: return "NotVerticallyComposable";
    case Errc::not_whiskerable: return "NotWhiskerable";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::unsupported_backend: return "UnsupportedBackend";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::not_natural_pair: return "NotNaturalPair";
    case Errc::not_composable_cells: return "NotComposableCells";
    case Errc::action_axiom_violation: return "ActionAxiomViolation";
    case Errc::unknown_object: return "UnknownObject";
    case Errc::not_cartesian_here: return "NotCartesianHere";
    case Errc::type_mismatch: return "TypeMismatch";
    case Errc::missing_pullback: return "MissingPullback";
    case Errc::delta_not_central: return "DeltaNotCentral";
    case Errc::delta_not_in_kernel: return "DeltaNotInKernel";
    case Errc::side_condition_violation: return "SideConditionViolation";
    case Errc::quotient_ill_typed: return "QuotientIllTyped";
    case Errc::invalid_presentation: return "InvalidPresentation";
    case Errc::parse_error: return "ParseError";
    case Errc::resolve_error: return "ResolveError";
  }
  return "Error";
}

void ValidationReport::add(std::string axiom, std::vector<std::string> witnesses, std::string detail) {
  findings_.push_back(Finding{"violation", std::move(axiom), std::move(witnesses), std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other) {
  findings_.insert(findings_.end(), other.findings_.begin(), other.findings_.end());
}

bool ValidationReport::mentions(std::string_view axiom) const {
  return std::any_of(findings_.begin(), findings_.end(), [&](const Finding& f) { return f.axiom == axiom; });
}

}  // namespace sesq
