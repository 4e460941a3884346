#include "hammersim/page_map.hpp"

#include "hammersim/errors.hpp"

namespace hammersim {

const char* to_string(Owner owner) {
    switch (owner) {
    case Owner::Attacker: return "attacker";
    case Owner::Victim: return "victim";
    case Owner::Kernel: return "kernel";
    default: return "free";
    }
}

Owner owner_from_string(const std::string& s) {
    if (s == "attacker") return Owner::Attacker;
    if (s == "victim") return Owner::Victim;
    if (s == "kernel") return Owner::Kernel;
    if (s == "free") return Owner::Free;
    throw FormatError("unknown owner: " + s);
}

void PageMap::set_owner(RowAddress addr, Owner owner) {
    owners_[key(addr)] = owner;
}

void PageMap::set_owner_range(std::uint32_t bank, std::uint32_t row_lo, std::uint32_t row_hi,
                              Owner owner) {
    if (row_hi < row_lo)
        throw RangeError("page map: row range upper bound below lower bound");
    for (std::uint32_t row = row_lo; row <= row_hi; ++row)
        set_owner({bank, row}, owner);
}

Owner PageMap::owner(RowAddress addr) const {
    auto it = owners_.find(key(addr));
    return it == owners_.end() ? Owner::Free : it->second;
}

} // namespace hammersim
