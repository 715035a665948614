import os
import tempfile
import config.settings as settings


def test_data_dir_writable():
    """Fail if the directory where user identity files live is not writable."""
    parent = str(settings.IDENTITY_DIR)

    # Ensure parent exists
    os.makedirs(parent, exist_ok=True)

    # Attempt to create and remove a temp file in that directory
    try:
        fd, tmp = tempfile.mkstemp(dir=parent)
        os.close(fd)
        os.remove(tmp)
    except Exception as e:
        pytest_msg = (
            f"Identity directory '{parent}' is not writable: {e}\n"
            "Set XDG_DATA_HOME (or LOCALAPPDATA) to a user-writable path."
        )
        raise AssertionError(pytest_msg)


def test_shipped_identities_present():
    """The worked identity files ship with the project tree."""
    names = {p.name for p in settings.PROJECT_IDENTITY_DIR.glob('*.json')}
    assert {'dZ2.json', 'dZ22.json', 'dZ23_conjecture.json'} <= names
