#pragma once

#include <pfcy/errors.hpp>
#include <pfcy/exactnum.hpp>
#include <pfcy/geometry.hpp>
#include <pfcy/interp.hpp>
#include <pfcy/io.hpp>
#include <pfcy/oracle.hpp>
#include <pfcy/parse.hpp>
#include <pfcy/partfrac.hpp>
#include <pfcy/poly.hpp>
