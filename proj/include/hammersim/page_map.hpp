#pragma once

#include "hammersim/geometry.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>

namespace hammersim {

/// Row ownership labels. Labels only: no privilege semantics are simulated.
enum class Owner { Attacker, Victim, Kernel, Free };

const char* to_string(Owner owner);
Owner owner_from_string(const std::string& s);

/// OS-page ownership overlay, one owner per (bank,row). Rows default to Free.
class PageMap {
  public:
    void set_owner(RowAddress addr, Owner owner);
    void set_owner_range(std::uint32_t bank, std::uint32_t row_lo, std::uint32_t row_hi,
                         Owner owner);
    Owner owner(RowAddress addr) const;

    bool empty() const { return owners_.empty(); }

  private:
    static std::uint64_t key(RowAddress addr) {
        return (static_cast<std::uint64_t>(addr.bank) << 32) | addr.row;
    }
    std::unordered_map<std::uint64_t, Owner> owners_;
};

} // namespace hammersim
