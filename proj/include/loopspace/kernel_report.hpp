#ifndef LOOPSPACE_KERNEL_REPORT_HPP
#define LOOPSPACE_KERNEL_REPORT_HPP

#include <cstdint>
#include <map>

#include "loopspace/algebra.hpp"

namespace loopspace {

struct KernelCoker {
    std::uint64_t ker = 0;
    std::uint64_t coker = 0;

    friend bool operator==(const KernelCoker&, const KernelCoker&) = default;
};

/// Dimensions of ker and coker of (1 - signed rotation) on one degree of T(V),
/// broken down by word length.
struct KernelReport {
    WedgeSpec wedge;
    int degree = 0;
    std::uint64_t ker_dim = 0;
    std::uint64_t coker_dim = 0;
    std::map<std::size_t, KernelCoker> per_length;

    FieldTag field() const { return wedge.field(); }

    void add(std::size_t length, std::uint64_t ker, std::uint64_t coker) {
        per_length[length] = {ker, coker};
        ker_dim += ker;
        coker_dim += coker;
    }
};

} // namespace loopspace

#endif
