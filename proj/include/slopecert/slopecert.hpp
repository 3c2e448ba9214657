#pragma once

#include "slopecert/anosov.hpp"
#include "slopecert/arith.hpp"
#include "slopecert/certify.hpp"
#include "slopecert/class_maps.hpp"
#include "slopecert/conventions.hpp"
#include "slopecert/error.hpp"
#include "slopecert/farey.hpp"
#include "slopecert/farey_oracle.hpp"
#include "slopecert/json_io.hpp"
#include "slopecert/matrix.hpp"
#include "slopecert/normal_torus.hpp"
#include "slopecert/slope.hpp"
