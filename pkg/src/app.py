import logging
import os

import pandas as pd
import streamlit as st
from dotenv import load_dotenv

from src.errors import CodecError, InputError
from src.pipelines.message_codec import decode_message, encode_message, inspect_message
from src.tasks.alphabet import key_for_block_count
from src.tasks.codec import DISCLOSED_LABELS
from src.tasks.serializer import CodedMessage, parse, serialize

# Load environment variables
load_dotenv()

log = logging.getLogger(__name__)


def coded_frame(coded: CodedMessage) -> pd.DataFrame:
    """One table row per block: d followed by the disclosed entries."""
    columns = ["d"] + [f"b{k}" for k in DISCLOSED_LABELS]
    return pd.DataFrame(
        [row.fields() for row in coded.rows],
        columns=columns,
        index=pd.Index(range(1, len(coded.rows) + 1), name="block"),
    )


class PadovanCodecApp:
    """Streamlit application for encoding and decoding Padovan block messages."""

    def __init__(self, max_message_length=None, log_level=None):
        """
        Initialize the application.

        Args:
            max_message_length: Longest message accepted in the encode tab
            log_level: Logging level name for the app process
        """
        try:
            self.max_message_length = max_message_length or int(os.getenv("PADOVAN_MAX_MESSAGE_LENGTH", "2000"))
            if self.max_message_length < 1:
                raise ValueError(f"PADOVAN_MAX_MESSAGE_LENGTH must be positive, got {self.max_message_length}")
            self.log_level = log_level or os.getenv("PADOVAN_LOG_LEVEL", "WARNING")
            logging.basicConfig()
            # raises ValueError on an unknown level name
            logging.getLogger().setLevel(self.log_level.upper())

            # Set up session state
            if "coded" not in st.session_state:
                st.session_state.coded = None

            self.error = None

        except ValueError as e:
            self.error = str(e)
            log.error("Error initializing application: %s", e)

    def setup_ui(self):
        """Set up the page and sidebar."""
        st.set_page_config(page_title="Padovan Block Codec", page_icon="🔢")
        st.title("🔢 Padovan Q-Matrix Block Codec")

        if self.error:
            st.error(f"Error initializing application: {self.error}")
            st.warning("Please check the PADOVAN_* settings in the .env file.")
            return False

        with st.sidebar:
            st.title("How it works")
            st.markdown("""
                The message is laid out in a 3m x 3m matrix and cut into 3x3 blocks.

                **Each block is sent as:**
                - its determinant
                - its eight entries other than the center

                The receiver recovers each center from a linear equation built
                with the n-th power of the Padovan Q-matrix, where n = 4 for a
                single block and n = m² otherwise.
            """)

        return True

    def handle_encode(self):
        """Encode text typed by the user."""
        text = st.text_area("✏️ Message (letters and single spaces):", max_chars=self.max_message_length)
        if text and st.button("Encode"):
            try:
                coded = encode_message(text)
            except (InputError, CodecError) as e:
                st.error(f"Cannot encode message: {e}")
                return
            st.session_state.coded = coded
            self._show_coded(coded)
            st.download_button("Download coded file", serialize(coded), file_name="message.pdc")

    def handle_decode(self):
        """Decode an uploaded or pasted coded file."""
        uploaded_file = st.file_uploader("📄 Upload a coded file", type=["pdc", "txt"])
        pasted = st.text_area("Or paste the coded file:", height=150)

        data = None
        if uploaded_file is not None:
            data = uploaded_file.getvalue()
        elif pasted:
            data = pasted.encode("utf-8")

        if data is not None and st.button("Decode"):
            try:
                coded = parse(data)
                text = decode_message(coded)
            except InputError as e:
                st.error(f"Malformed coded file: {e}")
                return
            except CodecError as e:
                st.error(f"Corrupted message: {e}")
                return
            st.success("Decoded message:")
            st.code(text)

    def handle_inspect(self):
        """Show the decoding trace of the last encoded message."""
        coded = st.session_state.coded
        if coded is None:
            st.info("Encode a message first.")
            return
        report = inspect_message(coded, equations=True)
        st.code("\n".join(report.lines(equations=True)))

    def _show_coded(self, coded):
        key = key_for_block_count(coded.m)
        st.write(f"**m = {coded.m}, n = {key.n}, {len(coded.rows)} block(s)**")
        st.dataframe(coded_frame(coded))

    def run(self):
        """Run the application."""
        if not self.setup_ui():
            st.markdown("""
            ### Troubleshooting

            Both settings are optional. When set in `.env` they must read:
            ```
            PADOVAN_MAX_MESSAGE_LENGTH=2000   # a positive whole number
            PADOVAN_LOG_LEVEL=WARNING         # DEBUG, INFO, WARNING, ERROR or CRITICAL
            ```
            """)
            return
        encode_tab, decode_tab, inspect_tab = st.tabs(["Encode", "Decode", "Inspect"])
        with encode_tab:
            self.handle_encode()
        with decode_tab:
            self.handle_decode()
        with inspect_tab:
            self.handle_inspect()


# Example usage
if __name__ == "__main__":
    app = PadovanCodecApp()
    app.run()
