#pragma once

#include <kumlat/exact_matrix.hpp>
#include <kumlat/normal_forms.hpp>
#include <kumlat/abelian_group.hpp>
#include <kumlat/lattice.hpp>
#include <kumlat/kummer.hpp>
#include <kumlat/quotient_action.hpp>
#include <kumlat/cohomology.hpp>
#include <kumlat/reference.hpp>
#include <kumlat/report.hpp>
