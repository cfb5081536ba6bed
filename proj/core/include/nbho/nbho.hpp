#ifndef NBHO_NBHO_HPP
#define NBHO_NBHO_HPP

#include "nbho/analytic.hpp"
#include "nbho/eigensolver.hpp"
#include "nbho/errors.hpp"
#include "nbho/jmatrix.hpp"
#include "nbho/levels.hpp"
#include "nbho/model.hpp"
#include "nbho/oracle.hpp"
#include "nbho/system_io.hpp"

#endif
