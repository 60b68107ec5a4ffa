#include "si/image.hpp"

#include "si/errors.hpp"

namespace si {

int mask_intersection(const Mask& a, const Mask& b) {
    if (a.h != b.h || a.w != b.w)
        throw DomainError("mask_intersection: shape mismatch");
    int n = 0;
    for (size_t i = 0; i < a.v.size(); ++i) n += (a.v[i] && b.v[i]);
    return n;
}

int mask_union(const Mask& a, const Mask& b) {
    if (a.h != b.h || a.w != b.w)
        throw DomainError("mask_union: shape mismatch");
    int n = 0;
    for (size_t i = 0; i < a.v.size(); ++i) n += (a.v[i] || b.v[i]);
    return n;
}

}  // namespace si
