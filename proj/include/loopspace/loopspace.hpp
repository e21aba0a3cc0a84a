#ifndef LOOPSPACE_LOOPSPACE_HPP
#define LOOPSPACE_LOOPSPACE_HPP

#include "loopspace/errors.hpp"
#include "loopspace/algebra.hpp"
#include "loopspace/cyclic.hpp"
#include "loopspace/kernel_report.hpp"
#include "loopspace/exactla.hpp"
#include "loopspace/counting.hpp"
#include "loopspace/series.hpp"

#endif
