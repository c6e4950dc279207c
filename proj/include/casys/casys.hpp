#pragma once

#include <casys/analysis.hpp>
#include <casys/automaton.hpp>
#include <casys/case_studies.hpp>
#include <casys/composition.hpp>
#include <casys/control.hpp>
#include <casys/error.hpp>
#include <casys/io.hpp>
