#pragma once

#include "gqd/core.hpp"
#include "gqd/io.hpp"
#include "gqd/linalg.hpp"
#include "gqd/measures.hpp"
#include "gqd/oracle.hpp"
#include "gqd/parallel.hpp"
#include "gqd/random.hpp"
#include "gqd/sphere.hpp"
#include "gqd/states.hpp"
#include "gqd/sweep.hpp"
#include "gqd/verify.hpp"
