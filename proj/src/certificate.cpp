#include "splitforge/certificate.hpp"

namespace splitforge {

std::string case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::Free:
      return "free";
    case CaseTag::Reducible:
      return "reducible";
    case CaseTag::Radical:
      return "radical";
    case CaseTag::CompletedSquare:
      return "completed-square";
    case CaseTag::Nonradical:
      return "nonradical";
  }
  return "?";
}

std::optional<CaseTag> case_tag_from_name(const std::string& name) {
  if (name == "free") return CaseTag::Free;
  if (name == "reducible") return CaseTag::Reducible;
  if (name == "radical") return CaseTag::Radical;
  if (name == "completed-square") return CaseTag::CompletedSquare;
  if (name == "nonradical") return CaseTag::Nonradical;
  return std::nullopt;
}

}  // namespace splitforge
