"""
Quick diagnostic and testing utility.
Helps verify installation and debug issues.
"""

import sys
import os


def check_python():
    """Check Python version."""
    print("=" * 60)
    print("CHECKING PYTHON VERSION")
    print("=" * 60)
    version = sys.version_info
    print(f"Python version: {version.major}.{version.minor}.{version.micro}")

    if (version.major, version.minor) >= (3, 9):
        print("✓ Python version is compatible")
        return True
    else:
        print("✗ Python 3.9 or higher required (math.lcm)")
        return False


def check_dependencies():
    """Check if all dependencies are installed."""
    print("\n" + "=" * 60)
    print("CHECKING DEPENDENCIES")
    print("=" * 60)

    dependencies = [
        ('numpy', 'Object-array series kernel'),
        ('pandas', 'Tables and reports'),
        ('joblib', 'Parallel expansion'),
        ('sympy', 'Reference values in tests'),
        ('pytest', 'Test runner'),
    ]

    all_installed = True

    for module, description in dependencies:
        try:
            __import__(module)
            print(f"✓ {module:15s} - {description}")
        except ImportError:
            print(f"✗ {module:15s} - {description} (NOT INSTALLED)")
            all_installed = False

    if all_installed:
        print("\n✓ All dependencies installed correctly")
    else:
        print("\n✗ Some dependencies missing")
        print("Run: pip install -r requirements.txt")

    return all_installed


def check_file_structure():
    """Check if all required files exist."""
    print("\n" + "=" * 60)
    print("CHECKING FILE STRUCTURE")
    print("=" * 60)

    required_files = [
        'main.py',
        'config/settings.py',
        'qseries/rational.py',
        'qseries/poly.py',
        'qseries/series.py',
        'qmzv/families.py',
        'qmzv/indices.py',
        'qmzv/expansion.py',
        'qmzv/linear_solver.py',
        'qmzv/stuffle.py',
        'qmzv/conversion.py',
        'qmzv/derivation.py',
        'qmzv/relations.py',
        'cli/app.py',
        'cli/serialization.py',
        'cli/formatting.py',
    ]

    all_exist = True

    for filepath in required_files:
        if os.path.exists(filepath):
            print(f"✓ {filepath}")
        else:
            print(f"✗ {filepath} (MISSING)")
            all_exist = False

    if all_exist:
        print("\n✓ All required files present")
    else:
        print("\n✗ Some files missing")

    return all_exist


def check_data_directories():
    """Check the shipped identity files and the user data directory."""
    print("\n" + "=" * 60)
    print("CHECKING DATA DIRECTORIES")
    print("=" * 60)

    from config.settings import PROJECT_IDENTITY_DIR, IDENTITY_DIR

    shipped = sorted(PROJECT_IDENTITY_DIR.glob('*.json'))
    if shipped:
        print(f"✓ {PROJECT_IDENTITY_DIR} ({len(shipped)} identity files)")
    else:
        print(f"✗ {PROJECT_IDENTITY_DIR} has no identity files")

    if IDENTITY_DIR.exists():
        print(f"✓ {IDENTITY_DIR}/")
    else:
        print(f"! {IDENTITY_DIR}/ (Will be created)")
        os.makedirs(IDENTITY_DIR, exist_ok=True)

    print("\n✓ Data directories ready")
    return bool(shipped)


def test_imports():
    """Test if toolkit modules can be imported."""
    print("\n" + "=" * 60)
    print("TESTING MODULE IMPORTS")
    print("=" * 60)

    modules = [
        'config.settings',
        'qseries',
        'qmzv.families',
        'qmzv.expansion',
        'qmzv.stuffle',
        'qmzv.conversion',
        'qmzv.derivation',
        'qmzv.relations',
        'cli.app',
    ]

    all_imported = True

    for module in modules:
        try:
            __import__(module)
            print(f"✓ {module}")
        except Exception as e:
            print(f"✗ {module} - {str(e)[:50]}")
            all_imported = False

    if all_imported:
        print("\n✓ All modules import successfully")
    else:
        print("\n✗ Some modules failed to import")

    return all_imported


def test_self_checks():
    """Run a handful of fast exact checks."""
    print("\n" + "=" * 60)
    print("TESTING EXACT ARITHMETIC")
    print("=" * 60)

    try:
        from qmzv.expansion import bracket_expand, multiple_divisor_oracle
        assert bracket_expand((2,), 5).coefficients == (0, 1, 3, 4, 7, 6)
        print("✓ [2] expands to the divisor sums")

        assert bracket_expand((2, 1), 15) == multiple_divisor_oracle((2, 1), 15)
        print("✓ [2,1] matches the brute-force oracle")

        from qmzv.families import family_okounkov
        from qmzv.stuffle import reduction_coeffs
        assert reduction_coeffs(family_okounkov(), 2, 3) == [(5, 1)]
        print("✓ Okounkov reduction solver")

        from qmzv.derivation import d_oz_representation
        print(f"✓ d Z(2) = {d_oz_representation(2, check_precision=30).render()}")

        print("\n✓ Exact arithmetic functional")
        return True

    except Exception as e:
        print(f"\n✗ Self-check failed: {e}")
        import traceback
        traceback.print_exc()
        return False


def run_full_diagnostic():
    """Run complete diagnostic check."""
    print("\n")
    print("╔" + "=" * 58 + "╗")
    print("║" + " " * 14 + "q-MZV TOOLKIT - DIAGNOSTIC" + " " * 18 + "║")
    print("╚" + "=" * 58 + "╝")
    print()

    results = {}

    results['python'] = check_python()
    results['dependencies'] = check_dependencies()
    results['files'] = check_file_structure()
    results['imports'] = test_imports()
    results['directories'] = results['imports'] and check_data_directories()
    results['self_checks'] = results['imports'] and test_self_checks()

    # Summary
    print("\n" + "=" * 60)
    print("DIAGNOSTIC SUMMARY")
    print("=" * 60)

    passed = sum(1 for v in results.values() if v)
    total = len(results)

    print(f"\nTests Passed: {passed}/{total}")
    print()

    if passed == total:
        print("✅ ALL CHECKS PASSED!")
        print("\nRun: python main.py --help")
    else:
        print("⚠️  SOME CHECKS FAILED")
        print("\nFailed checks:")
        for name, result in results.items():
            if not result:
                print(f"  - {name}")

        print("\nSuggested fixes:")
        if not results['python']:
            print("  - Upgrade Python to 3.9 or higher")
        if not results['dependencies']:
            print("  - Run: pip install -r requirements.txt")
        if not results['files'] or not results['directories']:
            print("  - Re-download the project files")
        if not results['imports']:
            print("  - Check for missing dependencies")
        if not results['self_checks']:
            print("  - Check error messages above")

    print("\n" + "=" * 60)
    return 0 if passed == total else 1


if __name__ == "__main__":
    import argparse

    sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

    parser = argparse.ArgumentParser(description='Diagnostic tool for the q-MZV toolkit')
    parser.add_argument('--self-check', action='store_true', help='Run the exact self-checks only')
    parser.add_argument('--deps', action='store_true', help='Check dependencies only')

    args = parser.parse_args()

    if args.self_check:
        sys.exit(0 if test_self_checks() else 1)
    elif args.deps:
        sys.exit(0 if check_dependencies() else 1)
    else:
        sys.exit(run_full_diagnostic())
