"""
Streamlit launcher for the Padovan block codec.

    streamlit run main.py
"""

import os
import sys

# make `src` importable when streamlit runs this file directly
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.app import PadovanCodecApp  # noqa: E402

PadovanCodecApp().run()
