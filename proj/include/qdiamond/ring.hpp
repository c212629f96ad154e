#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qdiamond {

// Coefficient ring of a truncated series: exact integers, or Z/mZ with
// canonical representatives in [0, m). Two series interoperate only when
// their rings compare equal; integers are moved into a residue ring with
// reduce_mod, never implicitly.
class Ring {
public:
    static Ring integers() { return Ring(0); }

    static Ring residues(std::uint64_t modulus) {
        if (modulus < 2)
            throw std::invalid_argument("Ring::residues: modulus must be >= 2");
        return Ring(modulus);
    }

    bool is_exact() const { return modulus_ == 0; }
    std::uint64_t modulus() const { return modulus_; }

    bool operator==(const Ring&) const = default;

    std::string describe() const {
        return is_exact() ? "Z" : "Z/" + std::to_string(modulus_) + "Z";
    }

private:
    explicit Ring(std::uint64_t m) : modulus_(m) {}

    std::uint64_t modulus_;  // 0 means exact integers
};

}  // namespace qdiamond
