#ifndef RECTIHULL_RECTIHULL_HPP
#define RECTIHULL_RECTIHULL_HPP

#include "core.hpp"
#include "interval.hpp"
#include "maxima.hpp"
#include "region.hpp"
#include "hull.hpp"
#include "mesh.hpp"
#include "convex_chain.hpp"
#include "hull_tree.hpp"
#include "rotate.hpp"
#include "oracle.hpp"
#include "generators.hpp"
#include "io.hpp"

#endif  // RECTIHULL_RECTIHULL_HPP
