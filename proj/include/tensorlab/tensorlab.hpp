#ifndef TENSORLAB_TENSORLAB_HPP
#define TENSORLAB_TENSORLAB_HPP

#include "tensorlab/chain.hpp"
#include "tensorlab/combinatorics.hpp"
#include "tensorlab/conjecture_lab.hpp"
#include "tensorlab/errors.hpp"
#include "tensorlab/field.hpp"
#include "tensorlab/json_io.hpp"
#include "tensorlab/kruskal.hpp"
#include "tensorlab/linalg.hpp"
#include "tensorlab/rank_lab.hpp"
#include "tensorlab/search.hpp"
#include "tensorlab/tensor.hpp"
#include "tensorlab/zerosum.hpp"

#endif  // TENSORLAB_TENSORLAB_HPP
