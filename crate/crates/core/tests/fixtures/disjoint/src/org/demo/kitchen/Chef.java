package org.demo.kitchen;

import org.demo.astronomy.Telescope;

public class Chef {
    private Recipe recipe;
    private Pantry pantry;
    private Oven oven;
    private Telescope hobby;

    public Chef(Recipe recipe, Pantry pantry, Oven oven) {
        this.recipe = recipe;
        this.pantry = pantry;
        this.oven = oven;
    }

    public int knifeSkill() {
        return 9;
    }

    public int sauceBatches() {
        return 2;
    }

    public Recipe recipe() {
        return recipe;
    }
}
