#!/usr/bin/env python3
"""Regenerate src/zeros_builtin.cpp from the first 100 zeros (python-flint)."""
from decimal import Decimal

import flint

flint.ctx.prec = 80
lines = []
for z in flint.acb.zeta_zeros(1, 100):
    g = Decimal(z.imag.mid().str(24, radius=False, more=True))
    lines.append(f"    {g:.12f},")

body = "\n".join(lines)
print(f'''#include "glab/zeros.hpp"

#include <iterator>
#include <vector>

namespace glab {{

namespace {{

// Ordinates of the first 100 nontrivial zeros, 12 decimals.
constexpr double kFirstZeros[] = {{
{body}
}};

}}  // namespace

const ZeroTable& builtin_zeros() {{
  static const ZeroTable table(std::vector<double>(std::begin(kFirstZeros), std::end(kFirstZeros)),
                               "builtin", 12);
  return table;
}}

}}  // namespace glab''')
