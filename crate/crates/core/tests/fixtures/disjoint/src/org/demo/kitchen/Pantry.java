package org.demo.kitchen;

public class Pantry {
    private Ingredient ingredient;
    private Spice spice;

    public Pantry(Ingredient ingredient, Spice spice) {
        this.ingredient = ingredient;
        this.spice = spice;
    }

    public int shelfCount() {
        return 6;
    }

    public int flourSacks() {
        return 2;
    }

    public Ingredient ingredient() {
        return ingredient;
    }
}
