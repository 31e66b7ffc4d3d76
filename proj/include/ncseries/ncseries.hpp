#ifndef NCSERIES_NCSERIES_HPP
#define NCSERIES_NCSERIES_HPP

#include <ncseries/alphabet.hpp>
#include <ncseries/families.hpp>
#include <ncseries/json.hpp>
#include <ncseries/polynomial.hpp>
#include <ncseries/quasidet.hpp>
#include <ncseries/report.hpp>
#include <ncseries/series.hpp>
#include <ncseries/text.hpp>
#include <ncseries/variable.hpp>
#include <ncseries/walks.hpp>

#endif
