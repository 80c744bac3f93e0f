#pragma once

// Umbrella header for the full library.

#include "cayley.hpp"
#include "closed_forms.hpp"
#include "eig.hpp"
#include "generating.hpp"
#include "graph.hpp"
#include "lanczos.hpp"
#include "matrix.hpp"
#include "parallel.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "report_io.hpp"
#include "structure.hpp"
#include "verify.hpp"
