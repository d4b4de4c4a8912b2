#include "orient/check_report.hpp"

namespace orient {

const char* to_string(Witness::Kind kind) {
  switch (kind) {
    case Witness::Kind::vertex_set:
      return "vertex_set";
    case Witness::Kind::vertex_pair:
      return "vertex_pair";
    case Witness::Kind::path:
      return "path";
    case Witness::Kind::vertex:
      return "vertex";
    case Witness::Kind::description:
      return "description";
  }
  return "description";
}

nlohmann::json to_json(const CheckReport& report) {
  nlohmann::json j;
  j["check"] = report.check;
  j["hypothesis_holds"] = report.hypothesis_holds;
  j["conclusion_evaluated"] = report.conclusion_evaluated;
  j["conclusion_holds"] = report.conclusion_holds;
  if (report.witness) {
    j["witness"] = {{"kind", to_string(report.witness->kind)},
                    {"vertices", report.witness->vertices},
                    {"note", report.witness->note}};
  } else {
    j["witness"] = nullptr;
  }
  j["stats"] = report.stats;
  j["notes"] = report.notes;
  return j;
}

}  // namespace orient
