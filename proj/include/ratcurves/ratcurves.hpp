// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ratcurves Authors
#pragma once

#include "ratcurves/error.hpp"
#include "ratcurves/rational.hpp"
#include "ratcurves/univariate.hpp"
#include "ratcurves/linalg.hpp"
#include "ratcurves/form.hpp"
#include "ratcurves/bivariate.hpp"
#include "ratcurves/elimination.hpp"
#include "ratcurves/modular.hpp"
#include "ratcurves/kontsevich.hpp"
#include "ratcurves/torsion.hpp"
#include "ratcurves/cubic.hpp"
#include "ratcurves/singular.hpp"
#include "ratcurves/pencils.hpp"
#include "ratcurves/io.hpp"
