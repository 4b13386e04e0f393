/*!
  \file boolnet.hpp
  \brief Umbrella header.
*/

#pragma once

#include "bnn.hpp"
#include "boolfunc.hpp"
#include "coding.hpp"
#include "decouple.hpp"
#include "error.hpp"
#include "estimate.hpp"
#include "evaluate.hpp"
#include "fixed_point.hpp"
#include "io.hpp"
#include "lipschitz.hpp"
#include "netlist_builder.hpp"
#include "network.hpp"
#include "parallel.hpp"
#include "quantize.hpp"
#include "rational.hpp"
#include "simplify.hpp"
#include "synth.hpp"
#include "truth_table.hpp"
#include "types.hpp"
