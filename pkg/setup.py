"""
Setup and installation script for the q-MZV toolkit.
Helps users set up the environment and install dependencies.
"""

import subprocess
import sys
import os


def check_python_version():
    """Check if Python version is compatible."""
    version = sys.version_info
    if (version.major, version.minor) < (3, 9):
        print("Error: Python 3.9 or higher is required")
        print(f"Current version: {version.major}.{version.minor}.{version.micro}")
        return False
    print(f"✓ Python version {version.major}.{version.minor}.{version.micro} detected")
    return True


def create_virtual_environment():
    """Create ./venv unless one is already there."""
    if os.path.exists(_venv_executable("python")):
        print("\n✓ Reusing existing virtual environment")
        return True
    print("\nCreating virtual environment...")
    try:
        subprocess.run([sys.executable, "-m", "venv", "venv"], check=True)
        print("✓ Virtual environment created")
        return True
    except subprocess.CalledProcessError:
        print("✗ Failed to create virtual environment")
        return False


def _venv_executable(name):
    folder = "Scripts" if sys.platform == "win32" else "bin"
    suffix = ".exe" if sys.platform == "win32" else ""
    return os.path.join("venv", folder, name + suffix)


def install_dependencies():
    """Install the pinned stack into the venv and confirm it imports."""
    print("\nInstalling dependencies...")
    pip_path = _venv_executable("pip")

    try:
        subprocess.run([pip_path, "install", "-r", "requirements.txt"], check=True)
    except (OSError, subprocess.CalledProcessError):
        print("✗ Failed to install dependencies")
        print(f"  Retry with: {pip_path} install -r requirements.txt")
        return False

    # numpy/pandas/joblib/sympy/pytest must import from the venv interpreter
    check = subprocess.run([_venv_executable("python"), "diagnostic.py", "--deps"],
                           capture_output=True, text=True)
    if check.returncode != 0:
        print(check.stdout)
        print("✗ Dependencies installed but not importable")
        return False
    print("✓ numpy, pandas, joblib, sympy and pytest ready")
    return True


def create_data_directories():
    """Create the user identity directory next to the shipped ones."""
    print("\nCreating data directories...")

    sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
    from config.settings import IDENTITY_DIR

    os.makedirs(IDENTITY_DIR, exist_ok=True)
    print(f"✓ {IDENTITY_DIR}")
    return True


def print_next_steps():
    """Print usage instructions."""
    print("\n" + "=" * 60)
    print("SETUP COMPLETE!")
    print("=" * 60)
    activate = "venv\\Scripts\\activate" if sys.platform == "win32" else "source venv/bin/activate"
    print("\n  1. Activate virtual environment:")
    print(f"     {activate}")
    print("\n  2. Try the toolkit:")
    print("     python main.py expand --family okounkov --index 2,3 --terms 20")
    print("     python main.py derive --oz 3 --check 60")
    print("\n  3. Re-check the worked examples:")
    print("     python verify_examples.py")
    print("=" * 60 + "\n")


def main():
    """Main setup function."""
    print("=" * 60)
    print("q-MZV Toolkit - Setup")
    print("=" * 60)

    if not check_python_version():
        return 1

    if not create_data_directories():
        return 1

    print("\nWould you like to create a virtual environment? (recommended)")
    response = input("Create venv? (y/n): ").lower().strip()

    if response == 'y':
        if not create_virtual_environment():
            print("\nContinuing without virtual environment...")
        elif not install_dependencies():
            return 1
    else:
        print("\nSkipping virtual environment creation.")
        print("Make sure to install dependencies manually:")
        print("  pip install -r requirements.txt")

    print_next_steps()
    return 0


if __name__ == "__main__":
    sys.exit(main())
