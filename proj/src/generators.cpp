#include "jetflow/generators.hpp"

#include <algorithm>
#include <cctype>

namespace jetflow {

ParamRegistry& ParamRegistry::instance() {
  static ParamRegistry reg;
  return reg;
}

int ParamRegistry::intern(const std::string& name) {
  if (auto slot = find(name)) return *slot;
  if (name.empty()) throw ShapeError("empty parameter name");
  if (name == "x" || name == "r" || name == "u" || name == "ux" ||
      name == "uxx")
    throw ShapeError("parameter name '" + name + "' shadows a built-in");
  if (name[0] == 'u' && name.size() > 1 &&
      std::all_of(name.begin() + 1, name.end(),
                  [](unsigned char c) { return std::isdigit(c); }))
    throw ShapeError("parameter name '" + name + "' shadows a jet variable");
  if (count() >= kMaxParams) throw ShapeError("parameter table is full");
  names_.push_back(name);
  return kFirstParamSlot + count() - 1;
}

std::optional<int> ParamRegistry::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return kFirstParamSlot + static_cast<int>(i);
  return std::nullopt;
}

const std::string& ParamRegistry::name_of(int slot) const {
  auto idx = static_cast<std::size_t>(slot - kFirstParamSlot);
  if (slot < kFirstParamSlot || idx >= names_.size())
    throw ShapeError("unknown parameter slot");
  return names_[idx];
}

std::string slot_name(int slot) {
  if (slot == kSlotX) return "x";
  if (slot == kSlotR) return "r";
  if (is_jet_slot(slot)) {
    int order = slot_jet_order(slot);
    return order == 0 ? "u" : "u" + std::to_string(order);
  }
  return ParamRegistry::instance().name_of(slot);
}

std::optional<int> resolve_identifier(const std::string& ident) {
  if (ident == "x") return kSlotX;
  if (ident == "u" || ident == "u0") return jet_slot(0);
  if (ident == "ux") return jet_slot(1);
  if (ident == "uxx") return jet_slot(2);
  if (ident.size() > 1 && ident[0] == 'u' &&
      std::all_of(ident.begin() + 1, ident.end(),
                  [](unsigned char c) { return std::isdigit(c); })) {
    int order = std::stoi(ident.substr(1));
    if (order <= kJetOrderCap) return jet_slot(order);
    return std::nullopt;
  }
  return ParamRegistry::instance().find(ident);
}

}  // namespace jetflow
