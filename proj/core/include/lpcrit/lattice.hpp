#pragma once

#include <functional>
#include <vector>

#include "lpcrit/enclosure.hpp"

namespace lpcrit {

// number of x in Z^n with every coordinate >= 0 and |x|_1 = k
unsigned long long count_layer_nonneg(int n, long long k);

// number of x in Z^n with |x|_1 = k (signs free)
unsigned long long count_layer_full(int n, long long k);

// number of x in Z^n with |x|_1 <= k, i.e. the layer counts accumulated
unsigned long long count_ball(int n, long long k);

// visit every x in Z^n with |x|_1 = k; intended for brute-force checks,
// cost grows like the layer count itself
void for_each_layer_point(int n, long long k,
                          const std::function<void(const std::vector<long long>&)>& visit);

// (k+1)^(n-1)/(n-1)! <= count_layer_nonneg(n,k) <= (k+1)^(n-1)
Enclosure layer_count_envelope(int n, long long k);

}  // namespace lpcrit
