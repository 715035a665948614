"""Quick test to verify the toolkit modules work correctly."""
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

print("Testing imports...")
try:
    from config.settings import DEFAULT_PRECISION, IDENTITY_DIR
    print("✓ Config imported")

    from qseries import QSeries
    print("✓ Series ring imported")

    from qmzv import family_okounkov, zq_expand, stuffle_product, zq_to_brackets
    print("✓ q-MZV modules imported")

    from cli import main
    print("✓ CLI imported")

    print("\nTesting expansion...")
    series = zq_expand(family_okounkov(), (2, 3), 10)
    print(f"✓ Z(2,3) to q^10: {', '.join(str(c) for c in series.coefficients)}")

    print("\nTesting stuffle product...")
    product = stuffle_product(family_okounkov(), (2,), (3,))
    print(f"✓ Z(2) * Z(3) = {product.render()}")

    print("\nTesting conversion...")
    print(f"✓ Z(4) = {zq_to_brackets(family_okounkov(), (4,)).render()}")

    print(f"\nDefault precision: {DEFAULT_PRECISION}; user identities in {IDENTITY_DIR}")

    print("\n" + "="*50)
    print("All systems operational!")
    print("="*50)

except Exception as e:
    print(f"\n✗ Error: {e}")
    import traceback
    traceback.print_exc()
    sys.exit(1)
