// Umbrella header.
#pragma once

#include "hullseq/classify.hpp"
#include "hullseq/envelope.hpp"
#include "hullseq/error.hpp"
#include "hullseq/exact.hpp"
#include "hullseq/generators.hpp"
#include "hullseq/geometry.hpp"
#include "hullseq/hull.hpp"
#include "hullseq/io.hpp"
#include "hullseq/oracles.hpp"
#include "hullseq/parallel.hpp"
#include "hullseq/preprocess.hpp"
#include "hullseq/reconstruct.hpp"
#include "hullseq/sortseq1d.hpp"
#include "hullseq/strip_hull.hpp"
#include "hullseq/svg.hpp"
