#ifndef POWERGEN_POWERGEN_HPP
#define POWERGEN_POWERGEN_HPP

#include <powergen/errors.hpp>
#include <powergen/exact.hpp>
#include <powergen/identities.hpp>
#include <powergen/numeric.hpp>
#include <powergen/ratfn.hpp>
#include <powergen/render.hpp>
#include <powergen/report.hpp>
#include <powergen/special_polys.hpp>
#include <powergen/sweep.hpp>

#endif
