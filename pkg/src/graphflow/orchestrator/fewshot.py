"""Shipped example exchanges for few-shot prompting.

Four request/script pairs that together exercise every component
category. Scripts are heavily commented on purpose: the examples teach
format as much as content.
"""
from __future__ import annotations

_LIFTED_DISC_REQUEST = """\
I need a workflow to draw a circle whose radius comes from a slider \
between 1 and 10 with a default of 4 (accurate to a tenth), raised 5 \
units above the ground plane."""

_LIFTED_DISC_SCRIPT = """\
# radius parameter: 1 to 10, default 4, tenth steps
add params.number_slider radius { min: 1, max: 10, value: 4, decimals: 1 }
# the base circle on the world ground plane
add curve.circle disc
connect radius.0:value -> disc.1:radius
# lift it 5 units along world z
add vector.unit_z lift { factor: 5 }
add transform.move raised
connect disc.0 -> raised.0:geometry
connect lift.0 -> raised.1:motion
# show only the final shape
hide disc
show raised
layout auto
"""

_CIRCLE_ROW_REQUEST = """\
Create a row of circles along the x axis, one unit apart, radius \
starting at 0.5 and growing by 0.2 per step. The count is a whole \
number from 1 to 12, default 6."""

_CIRCLE_ROW_SCRIPT = """\
# how many circles: whole numbers 1 to 12, default 6
add params.integer_slider count { min: 1, max: 12, value: 6 }
# x positions 0, 1, 2, ...
add sets.series xs { start: 0, step: 1 }
connect count.0:value -> xs.2:count
# index list 0, 1, 2, ... for the radius growth
add sets.series indices { start: 0, step: 1 }
connect count.0 -> indices.2
# radii 0.5 + 0.2 * index
add maths.multiply growth { b: 0.2 }
connect indices.0 -> growth.0:a
add maths.add radii { b: 0.5 }
connect growth.0 -> radii.0:a
# one construction plane per x position
add vector.construct_point origins
connect xs.0 -> origins.0:x
add vector.construct_plane planes
connect origins.0 -> planes.0:origin
# the circles themselves
add curve.circle row
connect planes.0 -> row.0:plane
connect radii.0 -> row.1:radius
show row
layout auto
"""

_HEX_PLATE_REQUEST = """\
A hexagonal plate: outline radius on a slider from 2 to 8, default 5, \
accurate to a hundredth, extruded 0.75 upward into a closed solid. \
Also report the area enclosed by the outline."""

_HEX_PLATE_SCRIPT = """\
# plate radius: 2 to 8, default 5, hundredth steps
add params.number_slider radius { min: 2, max: 8, value: 5, decimals: 2 }
# hexagonal outline
add curve.polygon outline { sides: 6 }
connect radius.0:value -> outline.1:radius
# extrude 0.75 along world z into a capped solid
add vector.unit_z thickness { factor: 0.75 }
add surface.extrude plate
connect outline.0 -> plate.0:base
connect thickness.0 -> plate.1:direction
# measure the enclosed area of the outline
add analysis.area base_area
connect outline.0 -> base_area.0:geometry
# only the solid is shown
hide outline
show plate
layout auto
"""

_FUNNEL_REQUEST = """\
An octagonal funnel: bottom outline radius fixed at 6, top outline \
radius on a slider from 1 to 4 (default 2, tenths), raised by a height \
slider from 3 to 12 (default 8, tenths), the top twisted an eighth of \
a turn, and the two outlines lofted into a closed solid."""

_FUNNEL_SCRIPT = """\
# parameters: top radius and height
add params.number_slider top_radius { min: 1, max: 4, value: 2, decimals: 1 }
add params.number_slider height { min: 3, max: 12, value: 8, decimals: 1 }
# fixed bottom outline
add curve.polygon bottom { radius: 6, sides: 8 }
# top outline, same vertex count so the loft matches rim to rim
add curve.polygon top_flat { sides: 8 }
connect top_radius.0:value -> top_flat.1:radius
# raise the top by the height parameter
add vector.unit_z up
connect height.0 -> up.0:factor
add transform.move top_raised
connect top_flat.0 -> top_raised.0:geometry
connect up.0 -> top_raised.1:motion
# an eighth of a turn, written as a formula
add maths.expression eighth { formula: "pi / 4" }
add transform.rotate top_turned
connect top_raised.0 -> top_turned.0:geometry
connect eighth.0:result -> top_turned.1:angle
# closed loft between the rims
add surface.loft funnel
connect bottom.0 -> funnel.0:bottom
connect top_turned.0 -> funnel.1:top
# hide the construction stages
hide bottom
hide top_flat
hide top_raised
hide top_turned
show funnel
layout auto
"""

FEWSHOT_PAIRS: tuple[tuple[str, str], ...] = (
    (_LIFTED_DISC_REQUEST, _LIFTED_DISC_SCRIPT),
    (_CIRCLE_ROW_REQUEST, _CIRCLE_ROW_SCRIPT),
    (_HEX_PLATE_REQUEST, _HEX_PLATE_SCRIPT),
    (_FUNNEL_REQUEST, _FUNNEL_SCRIPT),
)

__all__ = ["FEWSHOT_PAIRS"]
