#include "etensor/commands.hpp"

#include <optional>

#include "etensor/errors.hpp"

namespace etensor {

namespace {

using io::Json;

CommandResult from_report(Json head, const Report& r) {
  const Json body = io::to_json(r);
  for (const auto& [k, v] : body.items()) head[k] = v;
  return {std::move(head), r.pass() ? kPass : kFail};
}

Matrix require_t(const io::AlgebraFile& f) {
  if (!f.t) throw ParseError("input has no \"T\" block");
  return *f.t;
}

DeformationSeries series_of(const EmbeddingTensor& e, const io::SeriesData& s, int order) {
  if (order > s.order) throw ShapeError("--order exceeds the order stored in the file");
  const int n = order < 0 ? s.order : order;
  return DeformationSeries(e, std::vector<Matrix>(s.taus.begin(), s.taus.begin() + n + 1));
}

// The ambient pair, or the witnesses that sank it.
std::optional<CommandResult> ambient_of(const Json& head, const io::AlgebraFile& f, AmbientPtr& out) {
  try {
    out = Ambient::make(f.g, f.rho);
  } catch (const RejectedError& e) {
    return from_report(head, e.report());
  }
  return std::nullopt;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"verify-algebra", "verify-rep",   "check-et",      "mc-check",
                                              "cohomology",     "deform-check", "deform-extend", "equivalence-check"};
  return names;
}

CommandResult run_command(const std::string& command, const io::AlgebraFile& f, const CommandOptions& opt) {
  Json head{{"command", command}};

  if (command == "verify-algebra") return from_report(head, check_fundamental_identity(f.g));

  if (command == "verify-rep") {
    Report r = check_fundamental_identity(f.g);
    r.merge(check_representation(f.g, f.rho));
    return from_report(head, r);
  }

  if (command != "check-et" && command != "mc-check" && command != "cohomology" && command != "deform-check" &&
      command != "deform-extend" && command != "equivalence-check")
    throw ParseError("unknown command: " + command);

  AmbientPtr amb;
  if (auto failed = ambient_of(head, f, amb)) return *failed;

  if (command == "check-et") {
    EmbeddingTensor t(amb, require_t(f));
    Report r = check_embedding_tensor(t);
    r.merge(graph_subalgebra_check(t));
    return from_report(head, r);
  }

  if (command == "mc-check") {
    const Cochain defect = DerivedBracket(amb).mc_defect(require_t(f));
    head["status"] = defect.is_zero() ? "pass" : "fail";
    head["mc_defect"] = io::to_json(defect);
    return {head, defect.is_zero() ? kPass : kFail};
  }

  const EmbeddingTensor e(amb, require_t(f));
  if (!e.verified()) return from_report(head, check_embedding_tensor(e));

  if (command == "cohomology") {
    if (opt.degree < 1) throw ShapeError("--degree must be at least 1");
    const ETComplex complex(e);
    const Json body = io::to_json(cohomology_group(complex, opt.degree), complex);
    for (const auto& [k, v] : body.items()) head[k] = v;
    return {head, kPass};
  }

  if (!f.deformation) throw ParseError("input has no \"deformation\" block");
  const DeformationSeries d = series_of(e, *f.deformation, opt.order);

  if (command == "deform-check") {
    head["order"] = d.order();
    return from_report(head, check_order_n(d));
  }

  if (command == "deform-extend") {
    head["order"] = d.order();
    const Report r = check_order_n(d);
    if (!r.pass()) return from_report(head, r);
    const Extension x = extend(d);
    if (x.tau_next) {
      head["status"] = "extended";
      head["tau_next"] = io::to_json(*x.tau_next);
      return {head, kPass};
    }
    head["status"] = "obstructed";
    head["obstruction"] = io::to_json(x.obstruction);
    return {head, kFail};
  }

  // equivalence-check
  if (!f.equivalent) throw ParseError("input has no \"equivalent\" block");
  if (!f.equivalence) throw ParseError("input has no \"equivalence\" block");
  const DeformationSeries other = series_of(e, *f.equivalent, opt.order);
  head["order"] = d.order();
  Report r = check_order_n(d);
  r.merge(check_order_n(other));
  if (r.pass()) r.merge(check_equivalence(d, other, *f.equivalence));
  CommandResult out = from_report(head, r);
  if (r.pass() && d.order() >= 1) out.body["same_class"] = same_infinitesimal_class(ETComplex(e), d, other);
  return out;
}

}  // namespace etensor
