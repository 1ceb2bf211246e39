#pragma once

#include "phyres/blocks.hpp"
#include "phyres/canonical.hpp"
#include "phyres/circular_order.hpp"
#include "phyres/consistent_orders.hpp"
#include "phyres/distance.hpp"
#include "phyres/enumerate.hpp"
#include "phyres/error.hpp"
#include "phyres/exterior.hpp"
#include "phyres/genetics.hpp"
#include "phyres/io.hpp"
#include "phyres/kalmanson.hpp"
#include "phyres/min_path.hpp"
#include "phyres/network.hpp"
#include "phyres/polytope.hpp"
#include "phyres/random.hpp"
#include "phyres/reconstruct.hpp"
#include "phyres/resistance.hpp"
#include "phyres/scalar.hpp"
#include "phyres/sigma.hpp"
#include "phyres/split.hpp"
#include "phyres/two_nested.hpp"
#include "phyres/wye_delta.hpp"
