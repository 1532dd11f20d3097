#pragma once

// Umbrella header for the inverse-semiring library.

#include "invrig/adjoin.hpp"
#include "invrig/bimodule.hpp"
#include "invrig/bounded_poly.hpp"
#include "invrig/core.hpp"
#include "invrig/finite/analysis.hpp"
#include "invrig/finite/congruence.hpp"
#include "invrig/finite/endo.hpp"
#include "invrig/finite/eunitary.hpp"
#include "invrig/finite/heart.hpp"
#include "invrig/finite/hom.hpp"
#include "invrig/finite/lattice.hpp"
#include "invrig/finite/module.hpp"
#include "invrig/finite/subsets.hpp"
#include "invrig/finite/table.hpp"
#include "invrig/free_poly.hpp"
#include "invrig/integers.hpp"
#include "invrig/io.hpp"
#include "invrig/product.hpp"
#include "invrig/rational.hpp"
#include "invrig/tropical.hpp"
