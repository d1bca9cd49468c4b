"""
Профили минимальной эвакуации Evakuatsu
"""

from .models import Box, Split, Witness, Profile
from .envelopes import (
    EnvelopeRequest,
    LEFT,
    RIGHT,
    left_envelope,
    right_envelope,
    lue,
    rue,
    theta_of_alpha,
    g_line,
    h_line,
    f_upper,
    f_upper_right
)
from .witnesses import min_max_profile, min_max_y_profile
from .edges import m_k, m_edge, m_edge_single
from .manager import ProfileManager

__all__ = [
    # Модели
    'Box',
    'Split',
    'Witness',
    'Profile',

    # Огибающие
    'EnvelopeRequest',
    'LEFT',
    'RIGHT',
    'left_envelope',
    'right_envelope',
    'lue',
    'rue',
    'theta_of_alpha',
    'g_line',
    'h_line',
    'f_upper',
    'f_upper_right',

    # Профили
    'min_max_profile',
    'min_max_y_profile',
    'm_k',
    'm_edge',
    'm_edge_single',
    'ProfileManager'
]
