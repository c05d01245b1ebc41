// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nfal/ambiguity.hpp"
#include "nfal/analysis.hpp"
#include "nfal/contour.hpp"
#include "nfal/field.hpp"
#include "nfal/geometry.hpp"
#include "nfal/io.hpp"
#include "nfal/loci.hpp"
#include "nfal/parallel.hpp"
#include "nfal/spectrum.hpp"
#include "nfal/types.hpp"
